"""Computing with nu-sets.

One parameter nu >= 1 selects the shape discipline: arity 1 gives augmented
semi-simplicial sets, arity 2 semi-cubical sets. The package implements the
word category of shapes, standard shapes as truncated presheaves, the
indexed (fibred-over-frames) form with its restriction and coherence laws,
the equivalence between the two presentations, the iterated parametricity
translation whose telescopes recount the words, and lazy streams of levels.
Everything is finite, explicit, and checkable; see the demos directory for
guided tours and the command line entry point ``nusets`` for file-level
access.
"""

__version__ = "0.1.0"
