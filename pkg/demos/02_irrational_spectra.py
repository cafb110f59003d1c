# # Irrational eigenvalues
#
# The icosahedron {5,2,1;1,2,5} has eigenvalues +-sqrt5. These are kept as
# exact algebraic numbers: a defining polynomial plus an isolating interval.

from fractions import Fraction

import numpy as np

from drgcheck.model import IntersectionArray, derive_parameters
from drgcheck.oracle import icosahedron
from drgcheck.spectral import AlgebraicNumber, spectrum
from drgcheck.spectral import polynomial as P

arr = IntersectionArray((5, 2, 1), (1, 2, 5))
sp = spectrum(arr, derive_parameters(arr))
for theta, m in zip(sp.eigenvalues, sp.multiplicities):
    if isinstance(theta, AlgebraicNumber):
        print(f"{theta.interval_string():28s} root of {P.to_string(theta.minimal_polynomial()):8s} mult {m}")
    else:
        print(f"{str(theta):28s} {'':16s} mult {m}")

# Comparisons stay exact however tight the interval is made.
root5 = sp.eigenvalues[1]
fine = root5.refined(Fraction(1, 10**30))
print("width after refinement:", float(fine.width))
print("sqrt5 > 2.236 ?", root5 > Fraction(2236, 1000))

# Cross-check against floating point eigenvalues of the graph itself.
numeric = np.linalg.eigvalsh(icosahedron().adjacency_matrix())
print("numpy:", np.unique(np.round(numeric, 9)))

# Some arrays give multiplicities that are not integers at all.
# {3,1;1,1} gives two irrational multiplicities, reported as enclosures.
odd = IntersectionArray((3, 1), (1, 1))
print([str(m) for m in spectrum(odd, derive_parameters(odd)).multiplicities])
