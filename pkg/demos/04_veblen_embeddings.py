"""Veblen terms and the two order embeddings between term systems.

Iterated-function terms embed into Veblen terms over 1+X, and Veblen terms
embed back into iterated-function terms over (2+X) x N.  Both maps preserve
the order; the run below samples pairs and counts violations.
"""
from ordforge.ahat import ahat_gen
from ordforge.embeddings import o_down, o_up, star_data
from ordforge.orders import FiniteSegment
from ordforge.suites import embedding_suite
from ordforge.syntax import format_aterm, format_vterm, parse_vterm
from ordforge.veblen import veb_add, veb_compare

X = FiniteSegment(2)

# %% Reading and comparing Veblen terms
omega = parse_vterm("p[0](p[0](0))")
eps = parse_vterm("p[1](0)")
print(format_vterm(veb_add(X, omega, omega)), "<", format_vterm(eps), ":",
      veb_compare(X, veb_add(X, omega, omega), eps))

# %% Upward embedding of a few random terms
for seed in range(3):
    t = ahat_gen(X, 8, seed)
    print(format_aterm(t), "->", format_vterm(o_up(X, t)))

# %% Coefficient data and the downward embedding
s = parse_vterm("p[1](p[0](0))+p[0](0)")
print(star_data(X, s))
print(format_aterm(o_down(X, s)))

# %% Monotonicity on a small sample
for r in embedding_suite(seed=1, iters=500):
    print(r.line())
