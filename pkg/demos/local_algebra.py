"""
Local algebras and their dimensions
===================================

Milnor and Tjurina numbers are dimensions of quotients of the local ring at
the origin.  They are computed from truncated Groebner bases and certified
once two consecutive truncations agree.
"""

from foliation_indices import buchberger, local_dim, oracle_quotient_dim, parse_polynomial, truncated_quotient_dim


def P(text, n=2):
    return parse_polynomial(text, n)


# A reduced Groebner basis and its staircase of standard monomials
gb = buchberger([P("x1^2 - x2"), P("x2^2")])
print("basis:", [str(g) for g in gb.generators])
print("staircase:", gb.standard_monomials())

# Truncating by m^N keeps every computation finite, even for x1*x2
for N in range(1, 6):
    print(f"dim Q[x]/(x1*x2 + m^{N}) =", truncated_quotient_dim([P("x1*x2")], N))

# The Milnor number of the cusp, certified by stabilization
cusp = P("x1^2 - x2^3")
res = local_dim(list(cusp.gradient()))
print("mu(cusp) =", res.dim, "certified at N =", res.truncation_level)

# The global quotient of <x1^3 - x1, x2> has three points; the origin sees one
print("local dim at 0:", local_dim([P("x1^3 - x1"), P("x2")]).dim)

# A non-isolated ideal never stabilizes and is reported as uncertified
print(local_dim([P("x1")], n_max=10))

# An independent linear-algebra oracle agrees with the Groebner count
ideal = [P("x1 - x2^2 + x1*x2"), P("x2^3 - x1^2")]
print([(truncated_quotient_dim(ideal, N), oracle_quotient_dim(ideal, N)) for N in range(1, 7)])
