"""Peak normal forms for all inputs when p divides q.

A valley is a word whose height profile stays at or below 0 and ends at 0;
non-trivial valleys are generated by  S -> SS | alpha T S beta t | alpha.
The pipeline for a difficult core (Britton reduction starting with T and
ending with t) is:

1. With ell the maximal height and m chosen so that T^ell u t^m ends at
   height 0, the word T^ell u t^m is a Britton-reduced valley.  Its normal
   form starts with T^ell (the leading residues vanish mod p and multiples
   of p commute across valleys), so for m = 0 stripping T^ell finishes the
   job; for m > 0 the part from the rightmost peak of T^ell u onwards is a
   valley that is re-normalised from the right (via the involution), and
   the two halves are glued.

2. A Britton-reduced valley v factors as v ~ V gamma with V a standard
   valley: trailing coefficient 0, |coefficients| < q everywhere and < p
   in front of every T.  The factorisation follows the grammar: leaves
   contribute their value, concatenations push constants to the right, and
   an arc alpha T U beta t splits alpha = mu p + alpha' and pushes mu q
   inward, then splits the emerging constant delta + mu q + beta =
   nu q + beta' and emits nu p.

3. For each standard valley V a range R(V), a set of multiples of p with
   |rho| <= r * s(V)  (r the least positive integer with
   r >= p*(r+3q-2)/q, s the sink count), and per rho a normal-form word
   V_rho with V ~ V_rho a^rho are computed by one bottom-up pass:

       leaf:    R = {0}
       U W:     sums of ranges; V_rho = min { U_sigma W_tau }
       arc:     alpha = eps p + alpha', sigma + eps q + beta = mu q + beta'
                with |alpha'| < p, |beta'| < q, rho = mu p;
                V_rho = min { alpha' T U_sigma beta' t }

   Minima are taken in the normal-form order (norm first, then the symbol
   order on the part before the peak, which for these words is everything
   up to the trailing coefficient).  Family words are kept as
   structure-sharing rope nodes; within one tree node all candidates share
   their t-sequence, and words for different shifts rho differ, so each
   node's words get strict ranks and comparisons cost O(1).

4. pnf(v) = min { V_rho llnf(rho + gamma) : rho in R(V) }.

All tree passes are iterative, so deeply nested valleys (tens of thousands
of levels) are fine.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key, lru_cache

from . import stats
from .britton import britton_reduce, decompose, is_britton_reduced
from .errors import (
    NotAValley,
    NotDifficult,
    RequiresDivides,
    UnsupportedCase,
)
from .horocyclic import int_norm, residues_mod
from .pnf import (
    BrittonPnf,
    _wrap_flanks,
    flatten_pnf,
    horocyclic_core_solver,
    make_britton_pnf,
)
from .words import (
    AltWord,
    GroupParams,
    alt_from_symbols,
    height_profile,
    involute,
    sym_key,
    to_alt,
)

__all__ = [
    "pi_residues",
    "ValleyNode",
    "ValleyTree",
    "valley_parse",
    "r_valley",
    "to_standard_valley",
    "is_standard_valley",
    "range_of",
    "valley_family",
    "valley_pnf",
    "difficult_pnf",
    "full_pnf",
    "geodesic_length",
]


def _require_divides(params: GroupParams) -> None:
    if not params.divides:
        raise RequiresDivides(f"p={params.p} does not divide q={params.q}")


def pi_residues(u: AltWord, params: GroupParams) -> tuple[tuple[int, ...], str]:
    """Coefficients mod p of the Britton reduction, with its t-sequence.

    For p dividing q this image depends only on the group element.
    """
    _require_divides(params)
    w = britton_reduce(u, params)
    return tuple(a % params.p for a in w.alpha), w.theta


@lru_cache(maxsize=None)
def r_valley(params: GroupParams) -> int:
    """Least positive r with r >= p*(r + 3q - 2)/q (the range radius)."""
    p, q = params.p, params.q
    return max(1, -(-(p * (3 * q - 2)) // (q - p)))


# ---------------------------------------------------------------------------
# valley parse trees
# ---------------------------------------------------------------------------

@dataclass
class ValleyNode:
    """One production of the valley grammar.

    kind 'leaf' carries an integer value; kind 'arc' is
    alpha T <child> beta t; kind 'cat' concatenates two valleys.  ``sinks``
    follows the grammar recursion: 1 for leaves, the child's count for
    arcs, and the sum for concatenations.
    """

    kind: str
    value: int = 0
    alpha: int = 0
    beta: int = 0
    child: int = -1
    left: int = -1
    right: int = -1
    sinks: int = 1


@dataclass
class ValleyTree:
    """Flat parse tree; children always precede their parents in ``nodes``."""

    nodes: list[ValleyNode]
    root: int

    def reassemble(self) -> AltWord:
        """The valley word spelled by the tree (inverse of valley_parse)."""
        return alt_from_symbols(_tree_symbols(self.nodes, self.root))


def _is_valley(w: AltWord) -> bool:
    prof = height_profile(w)
    return max(prof) == 0 and prof[-1] == 0


def valley_parse(v: AltWord) -> ValleyTree:
    """Deterministic parse of a valley along the grammar.

    The word is split at its returns to height zero; every T...t arc takes
    the coefficient in front of its T as alpha and the coefficient before
    its t as beta (the interior keeps a zero there), and a nonzero trailing
    coefficient becomes a final leaf.  Concatenations fold to the left.
    """
    if not _is_valley(v):
        raise NotAValley(f"height profile of {v} leaves [min..0] or ends above 0")
    nodes: list[ValleyNode] = []

    def fold(ids: list[int]) -> int:
        cur = ids[0]
        for nid in ids[1:]:
            nodes.append(
                ValleyNode(
                    "cat",
                    left=cur,
                    right=nid,
                    sinks=nodes[cur].sinks + nodes[nid].sinks,
                )
            )
            cur = len(nodes) - 1
        return cur

    sib_stack: list[list[int]] = [[]]
    alpha_stack: list[int] = []
    pending = v.alpha[0]
    for i, th in enumerate(v.theta):
        nxt = v.alpha[i + 1]
        if th == "T":
            alpha_stack.append(pending)
            sib_stack.append([])
            pending = nxt
        else:
            sibs = sib_stack.pop()
            if sibs:
                interior = fold(sibs)
            else:
                nodes.append(ValleyNode("leaf", value=0))
                interior = len(nodes) - 1
            nodes.append(
                ValleyNode(
                    "arc",
                    alpha=alpha_stack.pop(),
                    beta=pending,
                    child=interior,
                    sinks=nodes[interior].sinks,
                )
            )
            sib_stack[-1].append(len(nodes) - 1)
            pending = nxt
    top = sib_stack.pop()
    assert not sib_stack and not alpha_stack, "unbalanced valley"
    if pending != 0 or not top:
        nodes.append(ValleyNode("leaf", value=pending))
        top.append(len(nodes) - 1)
    return ValleyTree(nodes, fold(top))


def _tree_symbols(nodes: list[ValleyNode], root: int) -> list:
    """Symbols of the word a tree spells, trailing coefficient included."""
    out: list = []
    stack: list[tuple] = [(root, 0, 0)]
    while stack:
        nid, phase, extra = stack.pop()
        node = nodes[nid]
        if node.kind == "leaf":
            out.append(node.value)
        elif node.kind == "arc":
            if phase == 0:
                out.append(node.alpha)
                out.append("T")
                stack.append((nid, 1, 0))
                stack.append((node.child, 0, 0))
            else:
                out[-1] += node.beta
                out.append("t")
                out.append(0)
        else:
            if phase == 0:
                stack.append((nid, 1, 0))
                stack.append((node.left, 0, 0))
            elif phase == 1:
                carry = out.pop()
                stack.append((nid, 2, (carry, len(out))))
                stack.append((node.right, 0, 0))
            else:
                carry, idx = extra
                out[idx] += carry
    return out


# ---------------------------------------------------------------------------
# standardisation (valley ~ standard valley * integer)
# ---------------------------------------------------------------------------

def _standardize(tree: ValleyTree, params: GroupParams) -> tuple[ValleyTree, int]:
    """Rebuild the tree as a standard valley, returning the pushed constant."""
    p, q = params.p, params.q
    nodes = tree.nodes
    std: list[ValleyNode] = []
    stack: list[list] = [[tree.root, 0, 0, -1]]
    ret: tuple[int, int] | None = None  # (std node id, emitted constant)
    while stack:
        fr = stack[-1]
        nid, add, state = fr[0], fr[1], fr[2]
        node = nodes[nid]
        stats.ops.tick()
        if node.kind == "leaf":
            std.append(ValleyNode("leaf", value=0))
            ret = (len(std) - 1, node.value + add)
            stack.pop()
        elif node.kind == "arc":
            if state == 0:
                fr[2] = 1
                stack.append([node.child, 0, 0, -1])
            else:
                child_sid, delta = ret
                mu, app = divmod(node.alpha + add, p)
                nu, bp = divmod(delta + mu * q + node.beta, q)
                std.append(
                    ValleyNode(
                        "arc",
                        alpha=app,
                        beta=bp,
                        child=child_sid,
                        sinks=std[child_sid].sinks,
                    )
                )
                ret = (len(std) - 1, nu * p)
                stack.pop()
        else:
            if state == 0:
                fr[2] = 1
                stack.append([node.left, add, 0, -1])
            elif state == 1:
                left_sid, flow = ret
                fr[2] = 2
                fr[3] = left_sid
                stack.append([node.right, flow, 0, -1])
            else:
                right_sid, gamma = ret
                left_sid = fr[3]
                std.append(
                    ValleyNode(
                        "cat",
                        left=left_sid,
                        right=right_sid,
                        sinks=std[left_sid].sinks + std[right_sid].sinks,
                    )
                )
                ret = (len(std) - 1, gamma)
                stack.pop()
    sid, gamma = ret
    return ValleyTree(std, sid), gamma


def to_standard_valley(v: AltWord, params: GroupParams) -> tuple[AltWord, int]:
    """A standard valley V and gamma with v ~ V a^gamma (Britton-reduced)."""
    _require_divides(params)
    w = britton_reduce(v, params)
    if not _is_valley(w):
        raise NotAValley(f"{v} does not Britton-reduce to a valley")
    std, gamma = _standardize(valley_parse(w), params)
    return std.reassemble(), gamma


def is_standard_valley(V: AltWord, params: GroupParams) -> bool:
    """Trailing coefficient 0, |alpha_i| < q, and |alpha_i| < p before T."""
    p, q = params.p, params.q
    if not _is_valley(V) or not is_britton_reduced(V, params):
        return False
    if len(V.theta) == 0:
        return V.alpha == (0,)
    if V.alpha[-1] != 0:
        return False
    for i, th in enumerate(V.theta):
        bound = p if th == "T" else q
        if abs(V.alpha[i]) >= bound:
            return False
    return True


# ---------------------------------------------------------------------------
# ranges and families
# ---------------------------------------------------------------------------

def _eps_options(alpha: int, p: int) -> tuple[int, ...]:
    return tuple(e for e in (-1, 0, 1) if abs(alpha - e * p) < p)


def _ranges(tree: ValleyTree, params: GroupParams) -> list[tuple[int, ...]]:
    """Range R per node, children first (nodes are in child-first order)."""
    p, q = params.p, params.q
    out: list[tuple[int, ...]] = []
    for node in tree.nodes:
        if node.kind == "leaf":
            out.append((0,))
        elif node.kind == "arc":
            acc: set[int] = set()
            for sigma in out[node.child]:
                for eps in _eps_options(node.alpha, p):
                    x = sigma + eps * q + node.beta
                    for b2 in residues_mod(x, q):
                        stats.ops.tick()
                        acc.add(((x - b2) // q) * p)
            out.append(tuple(sorted(acc)))
        else:
            acc = {
                s + t_ for s in out[node.left] for t_ in out[node.right]
            }
            stats.ops.tick(len(out[node.left]) * len(out[node.right]))
            out.append(tuple(sorted(acc)))
    return out


class _Rope:
    """Structure-sharing family word; ``rank`` orders words within a node."""

    __slots__ = ("kind", "a", "b", "c", "norm", "rank")

    def __init__(self, kind, a=None, b=None, c=None, norm=0):
        self.kind = kind
        self.a = a
        self.b = b
        self.c = c
        self.norm = norm
        self.rank = 0


_EMPTY = _Rope("leaf")


def _u1_cmp(x: _Rope, y: _Rope) -> int:
    """Symbol order of the pre-peak parts; O(1) through child ranks."""
    if x is y:
        return 0
    stats.ops.tick()
    if x.kind == "arc":
        if x.a != y.a:
            return -1 if sym_key(x.a) < sym_key(y.a) else 1
        if x.b is not y.b:
            return -1 if x.b.rank < y.b.rank else 1
        if x.c != y.c:
            return -1 if sym_key(x.c) < sym_key(y.c) else 1
        return 0
    if x.kind == "cat":
        if x.a is not y.a:
            return -1 if x.a.rank < y.a.rank else 1
        if x.b is not y.b:
            return -1 if x.b.rank < y.b.rank else 1
        return 0
    return 0


def _rope_less(x: _Rope, y: _Rope) -> bool:
    if x.norm != y.norm:
        return x.norm < y.norm
    return _u1_cmp(x, y) < 0


def _families(tree: ValleyTree, params: GroupParams) -> list[dict[int, _Rope]]:
    """Per node the map rho -> best word V_rho, ropes ranked per node."""
    p, q = params.p, params.q
    fams: list[dict[int, _Rope]] = []
    for node in tree.nodes:
        if node.kind == "leaf":
            fam: dict[int, _Rope] = {0: _EMPTY}
        elif node.kind == "arc":
            fam = {}
            child_fam = fams[node.child]
            for sigma, crope in child_fam.items():
                for eps in _eps_options(node.alpha, p):
                    ap2 = node.alpha - eps * p
                    x = sigma + eps * q + node.beta
                    for b2 in residues_mod(x, q):
                        stats.ops.tick()
                        rho = ((x - b2) // q) * p
                        cand = _Rope(
                            "arc",
                            ap2,
                            crope,
                            b2,
                            crope.norm
                            + int_norm(ap2, params)
                            + int_norm(b2, params)
                            + 2,
                        )
                        cur = fam.get(rho)
                        if cur is None or _rope_less(cand, cur):
                            fam[rho] = cand
        else:
            fam = {}
            for sigma, lrope in fams[node.left].items():
                for tau, rrope in fams[node.right].items():
                    stats.ops.tick()
                    rho = sigma + tau
                    cand = _Rope("cat", lrope, rrope, None, lrope.norm + rrope.norm)
                    cur = fam.get(rho)
                    if cur is None or _rope_less(cand, cur):
                        fam[rho] = cand
        if len(fam) > 1:
            for rank, rope in enumerate(sorted(fam.values(), key=cmp_to_key(_u1_cmp))):
                rope.rank = rank
        fams.append(fam)
    return fams


def _rope_symbols(rope: _Rope) -> list:
    """Symbols of the family word, trailing zero coefficient included."""
    out: list = []
    stack: list[tuple] = [(rope, 0, 0)]
    while stack:
        node, phase, extra = stack.pop()
        if node.kind == "leaf":
            out.append(0)
        elif node.kind == "arc":
            if phase == 0:
                out.append(node.a)
                out.append("T")
                stack.append((node, 1, 0))
                stack.append((node.b, 0, 0))
            else:
                out[-1] += node.c
                out.append("t")
                out.append(0)
        else:
            if phase == 0:
                stack.append((node, 1, 0))
                stack.append((node.a, 0, 0))
            elif phase == 1:
                carry = out.pop()
                stack.append((node, 2, (carry, len(out))))
                stack.append((node.b, 0, 0))
            else:
                carry, idx = extra
                out[idx] += carry
    return out


def _parse_standard(V: AltWord, params: GroupParams) -> ValleyTree:
    if not is_standard_valley(V, params):
        raise NotAValley(f"{V} is not a standard valley")
    return valley_parse(V)


def range_of(V: AltWord, params: GroupParams) -> tuple[int, ...]:
    """The shift range R(V) of a standard valley (sorted multiples of p)."""
    _require_divides(params)
    tree = _parse_standard(V, params)
    return _ranges(tree, params)[tree.root]


def valley_family(V: AltWord, params: GroupParams) -> dict[int, tuple[AltWord, int]]:
    """All shifted normal forms: rho -> (V_rho, norm) with V ~ V_rho a^rho."""
    _require_divides(params)
    tree = _parse_standard(V, params)
    fams = _families(tree, params)
    out = {}
    for rho, rope in fams[tree.root].items():
        out[rho] = (alt_from_symbols(_rope_symbols(rope)), rope.norm)
    return out


# ---------------------------------------------------------------------------
# normal forms
# ---------------------------------------------------------------------------

def valley_pnf(v: AltWord, params: GroupParams) -> BrittonPnf:
    """Peak normal form of a valley: min over V_rho llnf(rho + gamma)."""
    _require_divides(params)
    w = britton_reduce(v, params)
    if not _is_valley(w):
        raise NotAValley(f"{v} does not Britton-reduce to a valley")
    if not w.theta:
        return make_britton_pnf(w, params)
    std, gamma = _standardize(valley_parse(w), params)
    fams = _families(std, params)
    best = None
    for rho, rope in fams[std.root].items():
        stats.ops.tick()
        key = (rope.norm + int_norm(rho + gamma, params), rope.rank)
        if best is None or key < best[0]:
            best = (key, rho, rope)
    _, rho, rope = best
    syms = _rope_symbols(rope)
    syms[-1] += rho + gamma
    return make_britton_pnf(alt_from_symbols(syms), params)


def difficult_pnf(u: AltWord, params: GroupParams) -> BrittonPnf:
    """Peak normal form of a difficult word via its two valley halves."""
    _require_divides(params)
    w = britton_reduce(u, params)
    if not (w.theta and w.theta[0] == "T" and w.theta[-1] == "t"):
        raise NotDifficult(f"t-sequence {w.theta!r} must start with T and end with t")
    prof = height_profile(w)
    ell = max(prof)
    m = ell - prof[-1]
    vw = AltWord((0,) * ell + w.alpha + (0,) * m, "T" * ell + w.theta + "t" * m)
    P = valley_pnf(vw, params).word
    assert P.theta == vw.theta
    assert all(P.alpha[i] == 0 for i in range(ell)), "missing T^ell prefix"
    if m == 0:
        return make_britton_pnf(AltWord(P.alpha[ell:], P.theta[ell:]), params)
    profP = height_profile(P)
    K = len(P.theta)
    jstar = max(i for i in range(K - m + 1) if profP[i] == 0)
    tail = AltWord(P.alpha[jstar:], P.theta[jstar:])
    Q = involute(valley_pnf(involute(tail), params).word)
    KQ = len(Q.theta)
    assert Q.theta[KQ - m :] == "t" * m
    assert all(Q.alpha[KQ - m + 1 + i] == 0 for i in range(m)), "missing t^m suffix"
    word = AltWord(
        P.alpha[ell:jstar] + Q.alpha[: KQ - m + 1],
        P.theta[ell:jstar] + Q.theta[: KQ - m],
    )
    return make_britton_pnf(word, params)


def full_pnf(w: str | AltWord, params: GroupParams) -> tuple[BrittonPnf, str, int]:
    """Peak normal form of an arbitrary word.

    Returns (Britton peak normal form, flattened geodesic letters, geodesic
    length).  For p not dividing q this works whenever the core of the
    Britton reduction is horocyclic (hills in particular) and raises
    UnsupportedCase otherwise.
    """
    u = to_alt(w) if isinstance(w, str) else w
    dec = decompose(u, params)
    if dec.core.theta == "":
        solver = horocyclic_core_solver(params)
    elif params.divides:
        def solver(cw: AltWord) -> BrittonPnf:
            return difficult_pnf(cw, params)
    else:
        raise UnsupportedCase(
            "computing geodesics of difficult words (t-sequence starting with"
            f" T and ending with t) is an open problem for p={params.p},"
            f" q={params.q} with p not dividing q"
        )
    bp = _wrap_flanks(dec, solver, params)
    flat = flatten_pnf(bp, params)
    return bp, flat, len(flat)


def geodesic_length(w: str | AltWord, params: GroupParams) -> int:
    """The geodesic length of the element represented by w."""
    return full_pnf(w, params)[2]
