"""
Indices of a vector field along an invariant hypersurface
=========================================================

For a germ ``(f, v)`` with ``f`` dividing ``v(f)`` we compute the Milnor
numbers, the Tjurina number, the GSV and Schwartz indices, and the residue.
"""

from foliation_indices import NotInvariant, VectorField, germ_indices, parse_polynomial


def show(title, ind):
    print(f"{title}: case={ind.case} mu_F={ind.mu_F} mu_D={ind.mu_D} tau={ind.tjurina} "
          f"GSV={ind.gsv} Sch={ind.schwartz} residue={ind.residue_cn}")


# Cone over the Fermat cubic surface with the radial field: Sch = 1, mu = 16
f = parse_polynomial("x1^3 + x2^3 + x3^3 + x4^3", 4)
show("Fermat cone, n=4", germ_indices(f, VectorField.radial(4)))

# In odd dimension the GSV index is the positive one
f = parse_polynomial("x1^3 + x2^3 + x3^3", 3)
show("cubic cone, n=3", germ_indices(f, VectorField.radial(3)))

# The plane cusp under its weighted Euler field
f = parse_polynomial("x1^2 - x2^3", 2)
v = VectorField([parse_polynomial("3*x1", 2), parse_polynomial("2*x2", 2)])
show("cusp", germ_indices(f, v))

# Points need not be at the origin: the data are translated first
f = parse_polynomial("x2", 2)
v = VectorField([parse_polynomial("x1 - x1^2", 2), parse_polynomial("2*x2 - x1*x2", 2)])
show("line at (1, 0)", germ_indices(f, v, (1, 0)))

# A hypersurface that is not invariant is refused with the offending remainder
try:
    germ_indices(parse_polynomial("x1", 2), VectorField([parse_polynomial("x2", 2), parse_polynomial("x1", 2)]))
except NotInvariant as exc:
    print("refused:", exc)
