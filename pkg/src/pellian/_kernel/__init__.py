"""Arithmetic kernel selection.

Imports the compiled integer-polynomial kernel when available and falls
back to the pure-Python implementation otherwise.  Set PELLIAN_PURE=1 to
force the fallback (used by the benchmark and the parity tests).
"""

import os

if os.environ.get("PELLIAN_PURE"):
    from pellian._kernel import _intpoly_py as impl
else:
    try:
        from pellian._kernel import _intpoly as impl  # type: ignore
    except ImportError:
        from pellian._kernel import _intpoly_py as impl

BACKEND = impl.BACKEND

norm = impl.norm
add = impl.add
sub = impl.sub
neg = impl.neg
mul = impl.mul
scale = impl.scale
shift_pow = impl.shift_pow
content = impl.content
primitive = impl.primitive
pseudo_divmod = impl.pseudo_divmod
divexact = impl.divexact
gcd = impl.gcd
eval_hom = impl.eval_hom
eval_int = impl.eval_int
sqrt = impl.sqrt
