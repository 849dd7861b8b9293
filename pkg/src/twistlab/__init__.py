"""Coxeter generating sets, twists, markings and complexity descent."""
