"""The binary dilator: numbers as finite sets of exponents.

A number below 2^n is a set of exponents in {0..n-1}.  A strictly increasing
map f on positions moves the exponents, and that is how a Goodstein system
changes coefficients.
"""
from ordforge.binary import BinaryDilator, bin_apply, bin_supp
from ordforge.dilators import bar_compare, check_support_criterion, eta, mu
from ordforge.goodstein import AffineBase, GoodsteinSystem, IdentityCoeff, ShiftCoeff, run
from ordforge.orders import DescSeq, FinMap, FiniteSegment

D = BinaryDilator()

# %% Moving exponents
f = FinMap((0, 2, 3), 5)
print("10 = 2^3 + 2^1 has support", sorted(bin_supp(4, 10)))
print("5 under", f, "is", bin_apply(f, 5))

# %% The support criterion, checked mechanically
print(check_support_criterion(D, 5))

# %% Splitting a number into (support, full-support value) and back
for tau in (0, 5, 12):
    el = mu(D, 4, tau)
    print(tau, "->", el, "->", eta(D, 4, el))

# %% Over fin:4 the extension is ordered like descending sequences, lexicographically
X = FiniteSegment(4)
a, b = mu(D, 4, 6), mu(D, 4, 9)
print(a, "vs", b, "->", bar_compare(D, X, a, b))
print("matching sequences compare as", DescSeq(X)._cmp(tuple(reversed(a.a)), tuple(reversed(b.a))))

# %% A system that never terminates: every step shifts all exponents up by one
trace = run(D, GoodsteinSystem(AffineBase(2, 1), ShiftCoeff(1)), 3, 12)
print(trace.values, trace.status)
trace = run(D, GoodsteinSystem(AffineBase(2, 1), IdentityCoeff()), 3, 12)
print(trace.values, trace.status)
