"""Independent sympy reference values for the simplex tests.

Builds simplex Jacobi polynomials from sympy's own jacobi(), integrates them
symbolically over the triangle, and solves for connection matrices by linear
algebra. Output is pasted into test_simplex.cpp.
"""
from sympy import Rational as R, symbols, jacobi, integrate, expand, simplify, Matrix, gamma, factor

x1, x2, t = symbols("x1 x2 t")


def basis(nu, k):
    n1, n2 = nu
    a1 = k[1] + k[2] + 2 * n2 + 1
    p1 = expand(jacobi(n1, a1, k[0], t).subs(t, 2 * x1 - 1))
    rest = 1 - x1
    p2 = expand(rest**n2 * jacobi(n2, k[2], k[1], t).subs(t, 2 * x2 / rest - 1))
    return expand(simplify(p1 * p2))


def inner(f, g, k):
    w = x1 ** k[0] * x2 ** k[1] * (1 - x1 - x2) ** k[2]
    num = integrate(integrate(expand(f * g) * w, (x2, 0, 1 - x1)), (x1, 0, 1))
    den = integrate(integrate(w, (x2, 0, 1 - x1)), (x1, 0, 1))
    return simplify(num / den)


def swap12(f):
    return expand(f.subs({x1: x2, x2: x1}, simultaneous=True))


k = (1, 2, 0)
print("norms kappa=(1,2,0):")
for nu in [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]:
    p = basis(nu, k)
    print(nu, inner(p, p, k))

print("c^(12) kappa=(1,2,0) n=2:")
order = [(2, 0), (1, 1), (0, 2)]
tk = (k[1], k[0], k[2])
P = [basis(nu, k) for nu in order]
rows = []
for nu in order:
    q = swap12(basis(nu, tk))
    rows.append([simplify(inner(q, p, k) / inner(p, p, k)) for p in P])
print(rows)
