"""Exact binomial arithmetic and the column difference function D(n, r)."""

from __future__ import annotations

import math

from .report import VerificationReport, timed


def binom(n: int, k: int) -> int:
    """C(n, k) as an exact integer; 0 when k < 0 or k > n.  Requires n >= 0."""
    if n < 0:
        raise ValueError(f"binom: n must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def d_value(n: int, r: int) -> int:
    """D(n, r) = C(n, r-1) - C(n, r) when r <= n, else 0.

    Both arguments must be positive; the identity sweeps below stay on that
    domain.
    """
    if n < 1 or r < 1:
        raise ValueError(f"d_value: arguments must be positive, got n={n}, r={r}")
    if r > n:
        return 0
    return math.comb(n, r - 1) - math.comb(n, r)


def hockey_stick(r: int, k: int) -> int:
    """Sum of C(r+i, i) for i = 0..k, which telescopes to C(r+k+1, k)."""
    if r < 0 or k < 0:
        raise ValueError(f"hockey_stick: arguments must be nonnegative, got r={r}, k={k}")
    total = sum(math.comb(r + i, i) for i in range(k + 1))
    assert total == math.comb(r + k + 1, k)
    return total


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


@timed
def verify_d_identities(n_max: int, r_max: int) -> VerificationReport:
    """Sweep the structural identities of D over a grid, exactly.

    With 1 <= n <= n_max and 1 <= r <= r_max where each statement applies:

    * sign trichotomy on r <= n: D(n, r) is positive, zero, or negative as
      2r is greater than, equal to, or less than n + 1;
    * the Pascal-style recurrence D(n-1, r-1) + D(n-1, r) = D(n, r),
      swept for 2 <= r <= n-1: at r = 1 the left side leaves the positive
      domain, and at r = n it would need the formula value C(n-1, n-1) = 1
      where the r > n rule returns 0 instead;
    * strict decrease in n once n >= 2r - 1, and hence D(n, r) < D(m, r)
      for every earlier row m < n in that range, except the corner
      n = 2r - 1 with m < r where both sides vanish and strictness fails;
    * column maxima: D(m, 1) <= D(1, 1) and, for r >= 2, D(m, r) <= D(2r-2, r);
    * the diagonal sums over r = 1..j of D(j-2+r, r) equal 1 for j >= 2;
    * D(2r, r) plus the sum over i < r of D(2i-2, i) is negative (the i = 1
      term is D(0, 1), which the r > n rule sends to 0).
    """
    if n_max < 1 or r_max < 1:
        raise ValueError(
            f"verify_d_identities: need n_max, r_max >= 1, got {n_max}, {r_max}")
    rep = VerificationReport("d-identities", {"n_max": n_max, "r_max": r_max})
    bad = rep.violations.append

    for n in range(1, n_max + 1):
        for r in range(1, min(r_max, n) + 1):
            v = d_value(n, r)
            want = 1 if 2 * r > n + 1 else (0 if 2 * r == n + 1 else -1)
            rep.checks_run += 1
            if _sign(v) != want:
                bad({"identity": "sign-trichotomy", "n": n, "r": r, "value": v})

    for n in range(3, n_max + 1):
        for r in range(2, min(r_max, n - 1) + 1):
            rep.checks_run += 1
            if d_value(n - 1, r - 1) + d_value(n - 1, r) != d_value(n, r):
                bad({"identity": "recurrence", "n": n, "r": r})

    for r in range(1, r_max + 1):
        lo = max(1, 2 * r - 1)
        for n in range(lo, n_max + 1):
            rep.checks_run += 1
            if not d_value(n + 1, r) < d_value(n, r):
                bad({"identity": "strict-decrease", "n": n, "r": r})
            for m in range(1, n):
                if n == 2 * r - 1 and m < r:
                    continue
                rep.checks_run += 1
                if not d_value(n, r) < d_value(m, r):
                    bad({"identity": "cross-row", "n": n, "m": m, "r": r})

    for m in range(1, n_max + 1):
        rep.checks_run += 1
        if not d_value(m, 1) <= d_value(1, 1):
            bad({"identity": "column-max", "m": m, "r": 1})
    for r in range(2, r_max + 1):
        peak = d_value(2 * r - 2, r)
        for m in range(1, n_max + 1):
            rep.checks_run += 1
            if not d_value(m, r) <= peak:
                bad({"identity": "column-max", "m": m, "r": r})

    for j in range(2, r_max + 1):
        total = sum(d_value(j - 2 + r, r) for r in range(1, j + 1))
        rep.checks_run += 1
        if total != 1:
            bad({"identity": "diagonal-sum", "j": j, "value": total})

    for r in range(1, r_max + 1):
        # i = 1 contributes D(0, 1) = 0 by the r > n rule; start the sum at i = 2
        total = d_value(2 * r, r) + sum(d_value(2 * i - 2, i) for i in range(2, r))
        rep.checks_run += 1
        if not total < 0:
            bad({"identity": "negative-column-sum", "r": r, "value": total})

    return rep
