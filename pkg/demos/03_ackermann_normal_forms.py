"""Ackermann normal forms and the dilator built from them.

Every positive m is a composition of iterated fast-growing functions applied
to 1, with strictly decreasing indices.  Relabelling the indices along an
increasing map gives a dilator whose values grow like the Ackermann function.
"""
from ordforge.ackermann import AckermannDilator, ack_apply, ack_eval, ack_nf, ack_supp, fgh_eval
from ordforge.ahat import ahat_compare, mu_inv
from ordforge.goodstein import GoodsteinSystem, TableBase, TableCoeff, run
from ordforge.orders import FinMap, FiniteSegment
from ordforge.syntax import format_aterm

# %% The fast-growing hierarchy at 1
print([fgh_eval(b, 1) for b in range(4)])

# %% Normal forms
for m in (1, 2, 6, 7, 10, 100, 2046):
    t = ack_nf(m)
    print(f"{m:5d}  {format_aterm(t):50s} back to {ack_eval(t)}")

# %% Relabelling indices
f = FinMap((0, 2), 3)
print("supp of 10 in A(3):", sorted(ack_supp(3, 10)))
print("6 in A(2) pushed along", f, "is", ack_apply(f, 6))

# %% Terms are compared structurally, and the comparison matches the numbers
X = FiniteSegment(3)
print(ahat_compare(X, mu_inv(3, 500), mu_inv(3, 1500)))

# %% A short Goodstein run with one coefficient jump
sys_ = GoodsteinSystem(TableBase((2, 3), 3), TableCoeff(((0, 2),)))
print(run(AckermannDilator(), sys_, 6, 50).values)
