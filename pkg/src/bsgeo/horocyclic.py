"""Length-lexicographic normal forms and geodesic lengths of integers.

For a horocyclic word w ~ a^alpha the normal form llnf(w) is computed in two
phases.  A greedy phase repeatedly splits alpha = q*mu + beta (remainder
taken in [0, q) for alpha >= 0 and in (-q, 0] otherwise) while the running
value has magnitude at least 2q, producing

    w  ~  t^ell  beta_0 T beta_1 ... T beta_ell

with |beta_i| < q for i != 0 and |beta_0| < 2q.  A dynamic program then
finds the normal form of the remaining slope (a word using only T between
coefficients).  With

    u(i, gamma) = beta_0 T ... beta_{i-1} T gamma

each column stores llnf(u(i, rho)) for all |rho| <= r, where r is the least
positive integer with r >= p*(r+q-1)/q + q - 1; the recurrence

    llnf(u(i+1, rho)) = min { llnf(u(i, mu*p + beta_i)) T gamma :
                              rho = mu*q + gamma, |gamma| < q }

bottoms out in a precomputed table of llnf(rho) for |rho| <= r + q.  The
baseline implementation stores whole words per column.  The optimized
variant keeps only suffixes (all hidden prefixes share a common length) plus
the lexicographic order of the hidden prefixes, and emits one matrix column
per round: the freshly cut fragment and a back-reference to the predecessor
row.  Following the back-references from any cell reconstructs the full
normal form; both variants agree letter for letter.

Norms: ||alpha|| = len(int_llnf(alpha)) and ||u|| = k + sum ||alpha_i||.

The per-parameter tables are built once and cached; all functions are pure
after that, so concurrent use is safe.
"""

from __future__ import annotations

from functools import lru_cache

from . import stats
from .britton import britton_reduce
from .errors import NotHorocyclic, PreconditionError
from .words import AltWord, GroupParams, ll_key, to_alt

__all__ = [
    "r_llnf",
    "base_table",
    "greedy_slope",
    "slope_llnf",
    "slope_dp_table",
    "slope_dp_optimized",
    "reconstruct_from_matrix",
    "int_llnf",
    "int_norm",
    "norm",
    "llnf_horocyclic",
    "llnf_shape_ok",
    "residues_mod",
]


@lru_cache(maxsize=None)
def r_llnf(params: GroupParams) -> int:
    """Least positive r with r >= p*(r+q-1)/q + q-1 (the slope DP radius)."""
    p, q = params.p, params.q
    num = (q - 1) * (p + q)
    den = q - p
    return max(1, -(-num // den))


def residues_mod(x: int, m: int) -> tuple[int, ...]:
    """All gamma with |gamma| < m and gamma == x (mod m): one or two values."""
    g = x % m
    return (g, g - m) if g else (0,)


def _run(n: int) -> str:
    return "a" * n if n >= 0 else "A" * (-n)


@lru_cache(maxsize=None)
def base_table(params: GroupParams) -> dict[int, str]:
    """llnf(rho) for small integers, |rho| <= r_llnf(params) + 2q - 1.

    The slope DP only ever looks up |rho| <= r + q; the table is sized a
    little wider so that all integers with |rho| < 2q plus the full shifted
    range are covered directly.  Geodesics of integers that use the letter
    t at all can be written as t^j a0 T a1 ... T aj, and the
    length-lexicographic minimum is of that staircase shape (leading t's
    are the cheapest letters).  The table is therefore an exhaustive search
    over staircase candidates no longer than the unary spelling, seeded
    with the unary words.
    """
    p, q = params.p, params.q
    bound = r_llnf(params) + 2 * q - 1
    best = {rho: _run(rho) for rho in range(-bound, bound + 1)}

    def consider(val: int, word: str) -> None:
        if -bound <= val <= bound and ll_key(word) < ll_key(best[val]):
            best[val] = word

    lmax = bound  # candidates longer than the unary spelling never win
    for j in range(1, lmax // 2 + 1):
        budget = lmax - 2 * j

        def dfs(level: int, val: int, left: int, parts: list[str]) -> None:
            stats.ops.tick()
            if level == j:
                consider(val, "t" * j + "".join(parts))
                return
            if abs(val) - left > bound or val % p:
                return  # cannot come back into range / cannot descend
            carried = (val // p) * q
            for nxt in range(-left, left + 1):
                parts.append("T" + _run(nxt))
                dfs(level + 1, carried + nxt, left - abs(nxt), parts)
                parts.pop()

        for a0 in range(-budget, budget + 1):
            dfs(0, a0, budget - abs(a0), [_run(a0)])

    return dict(best)


def greedy_slope(alpha: int, params: GroupParams) -> tuple[int, AltWord]:
    """Split off leading t's: llnf(a^alpha) = t^ell * llnf(slope).

    Repeatedly divides by q while the running value has magnitude >= 2q,
    keeping remainders in [0, q) for non-negative values and in (-q, 0]
    for negative ones.  The returned slope beta_0 T ... T beta_ell satisfies
    |beta_i| < q for i != 0 and |beta_0| < 2q, and ell is Theta(log|alpha|).
    """
    q, p = params.q, params.p
    rems: list[int] = []
    cur = alpha
    while abs(cur) >= 2 * q:
        stats.ops.tick()
        if cur >= 0:
            mu, beta = divmod(cur, q)
        else:
            beta = -((-cur) % q)
            mu = (cur - beta) // q
        rems.append(beta)
        cur = mu * p
    coeffs = (cur, *reversed(rems))
    return len(rems), AltWord(coeffs, "T" * len(rems))


def _check_slope(s: AltWord, params: GroupParams) -> None:
    if s.theta.strip("T"):
        raise PreconditionError("a slope uses only T between coefficients")
    q = params.q
    if abs(s.alpha[0]) >= 2 * q:
        raise PreconditionError(f"slope head {s.alpha[0]} must satisfy |.| < 2q")
    for c in s.alpha[1:]:
        if abs(c) >= q:
            raise PreconditionError(f"slope coefficient {c} must satisfy |.| < q")


def _dp_candidates(
    beta_i: int, rho: int, params: GroupParams, prev_bound: int
) -> list[tuple[int, int]]:
    """(previous rho, trailing gamma) pairs feeding llnf(u(i+1, rho))."""
    p, q = params.p, params.q
    out = []
    for gamma in residues_mod(rho, q):
        mu = (rho - gamma) // q
        prev = mu * p + beta_i
        if abs(prev) <= prev_bound:
            out.append((prev, gamma))
    return out


def slope_dp_table(s: AltWord, params: GroupParams) -> list[dict[int, str]]:
    """Baseline DP: column i holds llnf(u(i, rho)) for every |rho| <= r.

    Column 0 (the llnf table of small integers) is not included; use
    ``base_table``.  Requires a slope satisfying the greedy output bounds.
    """
    _check_slope(s, params)
    r = r_llnf(params)
    q = params.q
    base = base_table(params)
    cols: list[dict[int, str]] = []
    cur: dict[int, str] = {}
    for rho in range(-r, r + 1):
        cands = []
        for prev, gamma in _dp_candidates(s.alpha[0], rho, params, r + q):
            stats.ops.tick()
            cands.append(base[prev] + "T" + _run(gamma))
        cur[rho] = min(cands, key=ll_key)
    cols.append(cur)
    for i in range(1, len(s.theta)):
        beta_i = s.alpha[i]
        nxt: dict[int, str] = {}
        for rho in range(-r, r + 1):
            cands = []
            for prev, gamma in _dp_candidates(beta_i, rho, params, r):
                stats.ops.tick()
                cands.append(cur[prev] + "T" + _run(gamma))
            nxt[rho] = min(cands, key=ll_key)
        cols.append(nxt)
        cur = nxt
    return cols


def slope_llnf(s: AltWord, params: GroupParams) -> str:
    """The length-lexicographic normal form of a slope, as a letter word."""
    _check_slope(s, params)
    if not s.theta:
        return base_table(params)[s.alpha[0]]
    return slope_dp_table(s, params)[-1][s.alpha[-1]]


Matrix = list[dict[int, tuple[str, int | None]]]


def slope_dp_optimized(s: AltWord, params: GroupParams) -> Matrix:
    """Constant-memory DP emitting one matrix column per round.

    Between rounds only the suffixes behind a shared cut point and the
    lexicographic order of the hidden prefixes survive.  Each emitted cell
    holds the letters newly cut in that round (the whole remaining suffix in
    the final round) and the row index of the predecessor column, None in
    the first column.  ``reconstruct_from_matrix`` reads a normal form back
    off the matrix.
    """
    _check_slope(s, params)
    if not s.theta:
        return []
    r = r_llnf(params)
    q = params.q
    base = base_table(params)
    rows = range(-r, r + 1)
    ell = len(s.theta)
    matrix: Matrix = []

    # round 1 from the integer table
    words = {}
    for rho in rows:
        cands = []
        for prev, gamma in _dp_candidates(s.alpha[0], rho, params, r + q):
            stats.ops.tick()
            cands.append(base[prev] + "T" + _run(gamma))
        words[rho] = min(cands, key=ll_key)
    if ell == 1:
        matrix.append({rho: (words[rho], None) for rho in rows})
        return matrix
    cut = min(len(w) for w in words.values())
    matrix.append({rho: (words[rho][:cut], None) for rho in rows})
    suffixes = {rho: words[rho][cut:] for rho in rows}
    ranks = _rank_by({rho: words[rho][:cut] for rho in rows})

    for i in range(1, ell):
        beta_i = s.alpha[i]
        rel: dict[int, str] = {}
        pred: dict[int, int] = {}
        for rho in rows:
            best_key = None
            for prev, gamma in _dp_candidates(beta_i, rho, params, r):
                stats.ops.tick()
                cand = suffixes[prev] + "T" + _run(gamma)
                key = (len(cand), ranks[prev], cand.translate(_TR))
                if best_key is None or key < best_key:
                    best_key = key
                    rel[rho] = cand
                    pred[rho] = prev
        if i == ell - 1:
            matrix.append({rho: (rel[rho], pred[rho]) for rho in rows})
            return matrix
        step = min(len(w) for w in rel.values())
        matrix.append({rho: (rel[rho][:step], pred[rho]) for rho in rows})
        ranks = _rank_by({rho: (ranks[pred[rho]], rel[rho][:step]) for rho in rows})
        suffixes = {rho: rel[rho][step:] for rho in rows}
    return matrix


_TR = str.maketrans("tTaA", "0123")


def _rank_by(keys: dict[int, object]) -> dict[int, int]:
    """Dense ranks; equal keys (equal hidden prefixes) share a rank."""
    order = {}
    for i, key in enumerate(sorted(set(_norm_key(v) for v in keys.values()))):
        order[key] = i
    return {rho: order[_norm_key(v)] for rho, v in keys.items()}


def _norm_key(v):
    if isinstance(v, str):
        return (v.translate(_TR),)
    rank, frag = v
    return (rank, frag.translate(_TR))


def reconstruct_from_matrix(matrix: Matrix, rho: int) -> str:
    """Concatenate fragments along the back-references ending at (rho, last)."""
    parts: list[str] = []
    at: int | None = rho
    for col in reversed(matrix):
        frag, prev = col[at]
        parts.append(frag)
        at = prev
    return "".join(reversed(parts))


@lru_cache(maxsize=1 << 16)
def _int_llnf_cached(alpha: int, params: GroupParams) -> str:
    ell, slope = greedy_slope(alpha, params)
    return "t" * ell + slope_llnf(slope, params)


def int_llnf(alpha: int, params: GroupParams) -> str:
    """llnf(a^alpha) as a letter word: t^ell followed by a slope normal form."""
    return _int_llnf_cached(alpha, params)


def int_norm(alpha: int, params: GroupParams) -> int:
    """The geodesic length ||alpha|| of the integer alpha."""
    return len(_int_llnf_cached(alpha, params))


def norm(u: AltWord, params: GroupParams) -> int:
    """||u|| = k + sum ||alpha_i||; an upper bound for the geodesic length."""
    return len(u.theta) + sum(int_norm(a, params) for a in u.alpha)


def llnf_horocyclic(w: AltWord, params: GroupParams) -> str:
    """llnf of a horocyclic word; raises NotHorocyclic otherwise."""
    red = britton_reduce(w, params)
    if red.theta:
        raise NotHorocyclic(f"t-sequence {red.theta!r} is nonempty")
    return int_llnf(red.alpha[0], params)


def llnf_shape_ok(word: str, alpha: int, params: GroupParams) -> bool:
    """Shape predicate for llnf outputs of integers.

    A valid output is either a plain a/A run of magnitude < 2q, or
    t^k beta T a_1 ... T a_k with matching t/T counts, |a_i| < q,
    a_k == alpha (mod q), |beta| < 2q, and p dividing beta when k > 0.
    """
    p, q = params.p, params.q
    u = to_alt(word)
    k2 = len(u.theta)
    if k2 == 0:
        return u.alpha[0] == alpha and abs(alpha) < 2 * q
    if k2 % 2:
        return False
    k = k2 // 2
    if u.theta != "t" * k + "T" * k:
        return False
    if any(u.alpha[i] != 0 for i in range(k)):
        return False
    beta = u.alpha[k]
    tail = u.alpha[k + 1 :]
    if abs(beta) >= 2 * q or beta % p:
        return False
    if any(abs(c) >= q for c in tail):
        return False
    return (tail[-1] - alpha) % q == 0
