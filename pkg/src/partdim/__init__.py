"""Exact partition dimension, dominating partition dimension and related
location/domination parameters of small connected graphs."""
