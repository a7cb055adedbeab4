"""Pure-Python kernel for exact polynomial evaluation and segment restriction.

A polynomial of total degree <= 2 is encoded as three parallel tuples:

  keys : tuple of monomial keys; a key is a sorted tuple of variable ids of
         length 0, 1 or 2 (variable id 0 is the section weight s, id j >= 1
         is the fiber weight a_j),
  nums : tuple of coefficient numerators (int),
  dens : tuple of coefficient denominators (positive int).

Values of variables are passed as parallel numerator/denominator sequences
indexed by variable id.  All arithmetic is integer arithmetic on cleared
denominators; a single gcd normalization happens at the very end, which is
the main reason these routines beat naive Fraction term-by-term evaluation.

``weierwalls._kernel_c`` is a compiled twin with the same signatures; the
active backend is chosen in ``weierwalls._kernel``.
"""

from math import gcd

BACKEND = "python"


def eval_terms(keys, nums, dens, vnums, vdens):
    """Evaluate the encoded polynomial at the point (vnums[v]/vdens[v]).

    Returns the exact value as a normalized pair (num, den) with den > 0.
    """
    tot_n = 0
    tot_d = 1
    for i in range(len(keys)):
        n = nums[i]
        d = dens[i]
        for v in keys[i]:
            n *= vnums[v]
            d *= vdens[v]
        tot_n = tot_n * d + n * tot_d
        tot_d *= d
    return _norm(tot_n, tot_d)


def restrict_terms(keys, nums, dens, unums, udens, wnums, wdens):
    """Restrict the encoded polynomial to a line v(t) = u_v + t*w_v.

    Returns the univariate quadratic q(t) = c0 + c1*t + c2*t^2 as six ints
    (n0, d0, n1, d1, n2, d2), each pair normalized with positive denominator.
    """
    n0 = 0
    n1 = 0
    n2 = 0
    d0 = 1
    d1 = 1
    d2 = 1
    for i in range(len(keys)):
        key = keys[i]
        cn = nums[i]
        cd = dens[i]
        if len(key) == 0:
            n0 = n0 * cd + cn * d0
            d0 *= cd
        elif len(key) == 1:
            v = key[0]
            an = cn * unums[v]
            bn = cn * wnums[v]
            ad = cd * udens[v]
            bd = cd * wdens[v]
            n0 = n0 * ad + an * d0
            d0 *= ad
            n1 = n1 * bd + bn * d1
            d1 *= bd
        else:
            v, w = key
            # (u_v + t w_v)(u_w + t w_w): constant, linear and quadratic parts
            c0n = cn * unums[v] * unums[w]
            c0d = cd * udens[v] * udens[w]
            c1n = cn * (unums[v] * wnums[w] * udens[w] * wdens[v]
                        + wnums[v] * unums[w] * wdens[w] * udens[v])
            c1d = cd * udens[v] * wdens[v] * udens[w] * wdens[w]
            c2n = cn * wnums[v] * wnums[w]
            c2d = cd * wdens[v] * wdens[w]
            n0 = n0 * c0d + c0n * d0
            d0 *= c0d
            n1 = n1 * c1d + c1n * d1
            d1 *= c1d
            n2 = n2 * c2d + c2n * d2
            d2 *= c2d
    n0, d0 = _norm(n0, d0)
    n1, d1 = _norm(n1, d1)
    n2, d2 = _norm(n2, d2)
    return n0, d0, n1, d1, n2, d2


def _norm(n, d):
    if n == 0:
        return 0, 1
    if d < 0:
        n = -n
        d = -d
    g = gcd(n, d)
    return n // g, d // g
