"""bwtcat package.

This package computes both variants of the Burrows-Wheeler transform, counts the runs
of their output, generates the word families whose run counts are known in closed form,
and checks those closed forms against exact computation.
"""

__version__ = "0.1.0"
