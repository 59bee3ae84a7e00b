"""Reference values for two-variable Racah polynomials from direct term sums."""
from fractions import Fraction as F
from math import factorial


def poch(a, k):
    r = F(1)
    for i in range(k):
        r *= a + i
    return r


def R(nu, x, b, N):
    d = len(nu)
    X = [0] + list(x) + [N]
    out = F(1)
    for j in range(1, d + 1):
        pv = sum(nu[: j - 1])
        n = nu[j - 1]
        top = [-n, n + 2 * pv + b[j + 1] - b[0] - 1, pv - X[j], pv + b[j] + X[j]]
        bot = [2 * pv + b[j] - b[0], pv + b[j + 1] + X[j + 1], pv - X[j + 1]]
        # prod_b (b)_n 4F3, expanded termwise so no bottom is divided out
        tot = F(0)
        for k in range(n + 1):
            t = F(1, factorial(k))
            for a in top:
                t *= poch(a, k)
            for c in bot:
                t *= poch(c + k, n - k)
            tot += t
        out *= tot
    return out


def w(x, b, N):
    d = len(x)
    X = [0] + list(x) + [N]
    r = F(1)
    for j in range(d + 1):
        lo, hi = X[j], X[j + 1]
        r *= poch(b[j + 1] - b[j], hi - lo) * poch(b[j + 1], hi + lo)
        r /= factorial(hi - lo) * poch(b[j] + 1, hi + lo)
    for j in range(1, d + 1):
        r *= poch((b[j] + 2) / 2, X[j]) / poch(b[j] / 2, X[j])
    return r


b = [F(1, 2), F(5, 3), F(13, 4), F(9, 2)]
N = 3
pts = [(a, c) for a in range(N + 1) for c in range(a, N + 1)]
print("R_(1,1)(1,2) =", R((1, 1), (1, 2), b, N))
print("R_(2,0)(0,3) =", R((2, 0), (0, 3), b, N))
print("w(1,2) =", w((1, 2), b, N))
for nu in [(0, 0), (1, 0), (0, 1), (1, 1), (2, 1)]:
    print("norm", nu, sum(w(x, b, N) * R(nu, x, b, N) ** 2 for x in pts))
