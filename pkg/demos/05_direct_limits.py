"""Direct limits: where a Goodstein system's coefficient maps lead.

Gluing the finite bases along the coefficient maps gives a linear order.
With identity maps it looks like the naturals; when every map shifts by one,
each new stage adds a point below all earlier ones, so descending chains
appear.
"""
from ordforge.binary import BinaryDilator
from ordforge.goodstein import (AffineBase, ConstantBase, GoodsteinSystem, IdentityCoeff,
                                ShiftCoeff, descend_search, direct_limit, run, witness_map)
from ordforge.dilators import _bar_cmp

ident = GoodsteinSystem(AffineBase(2, 1), IdentityCoeff())
shift = GoodsteinSystem(AffineBase(2, 1), ShiftCoeff(1))

# %% Carriers, in increasing order
print("identity:", direct_limit(ident, 6).elements())
print("shift:   ", direct_limit(shift, 6).elements())

# %% Looking for descending chains
print(descend_search(shift, 10, 8))
print(descend_search(ident, 10, 2))

# %% A terminating run leaves a descending trail in the extension over the limit
D = BinaryDilator()
sys_ = GoodsteinSystem(ConstantBase(4))
trace = run(D, sys_, 5, 20)
lim = direct_limit(sys_, trace.at)
trail = witness_map(D, sys_, trace)
for g, h in zip(trail, trail[1:]):
    print(g, ">", h, _bar_cmp(D, lim, g, h) > 0)
