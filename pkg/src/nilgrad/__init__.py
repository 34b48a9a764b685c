"""Naturally graded nilpotent Lie algebras over the rationals."""
