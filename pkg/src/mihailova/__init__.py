"""Exact computations around Mihailova fiber products in F2 x F2 and the
Z^4-by-free gadget groups built from them."""

from ._backend import BACKEND
from .words import PairWord, Presentation, Word, parse_word, reduce

__version__ = "0.1.0"

__all__ = ["BACKEND", "PairWord", "Presentation", "Word", "parse_word", "reduce"]
