"""Exact non-Diophantine calculus on a double-covered Sierpinski set."""

from ._sierpcalc import *  # noqa: F401,F403
