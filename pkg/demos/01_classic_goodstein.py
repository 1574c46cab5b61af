"""Hereditary-base Goodstein sequences, step by step.

Write a number in hereditary base b, swap every b for a larger base, subtract
one, repeat.  The values explode before they eventually come back down.
"""
from ordforge.binary import classic_step, her_format, her_rep
from ordforge.goodstein import AffineBase, ConstantBase, classic_run

# %% One rewrite step
m = 2196
print("2196 in hereditary base 3:", her_format(her_rep(m, 3), 3))
print("after base 3 -> 5 and subtracting one:", classic_step(m, 3, 5))

# %% The usual sequence for 3 with bases 2, 3, 4, ...
trace = classic_run(AffineBase(2, 1), 3, 20)
for s in trace.steps:
    print(f"step {s.i:2d}  base {s.base:2d}  value {s.value}")
print("status:", trace.status, "at step", trace.at)

# %% Starting at 4 the run is far too long to finish, so watch the growth
trace = classic_run(AffineBase(2, 1), 4, 12)
print([s.value for s in trace.steps])

# %% With a constant base nothing is rewritten and the run just counts down
print(classic_run(ConstantBase(2), 5, 10).values)
