"""Rank-two Dynkin diagrams, Weyl-groupoid reflections, and the parameter atlas.

Every two-dimensional simple Yetter-Drinfeld module in the catalog sits
inside a diagonal braided vector space of rank two, recorded here as a
generalized Dynkin diagram (two vertex labels and one edge label).  The
groupoid of reflections of that diagram decides finiteness of the Nichols
algebra: a finite set of positive roots means finite dimension.  This module
also carries the arithmetic classification of the 120 + 120 parameter
quadruples into the six finite families and the two infinite ones, plus an
audit that checks the families actually tile the parameter space.
"""

from dataclasses import dataclass
from itertools import combinations

from .field import (ONE, ZERO, NotRootOfUnity, Scalar,
                    order_of_root_of_unity, xi_pow)
from .yd import lambda_params, sign, theta_params

CARTAN_BOUND = 24
ORBIT_CAP = 64
ROOT_CAP = 20


class ReflectionUndefined(ValueError):
    """Raised when a reflection needs a Cartan entry that does not exist."""


@dataclass(frozen=True)
class GDD:
    """Generalized Dynkin diagram of rank two: q11, q22 on the vertices and
    e = q12*q21 on the edge."""

    q11: Scalar
    q22: Scalar
    e: Scalar

    def __post_init__(self):
        for s in (self.q11, self.q22, self.e):
            if not s:
                raise ValueError("diagram labels must be nonzero")

    def vertex(self, v):
        if v == 1:
            return self.q11
        if v == 2:
            return self.q22
        raise ValueError(f"vertex must be 1 or 2, got {v}")


def cartan_entry(d, vertex, bound=CARTAN_BOUND):
    """Least m >= 0 with 1 + q + ... + q^m == 0 or q^m * e == 1, where q is
    the vertex label.  Returns None when no such m exists up to `bound`."""
    q = d.vertex(vertex)
    gauss = ZERO
    qpow = ONE
    for m in range(bound + 1):
        if qpow * d.e == ONE:
            return m
        gauss = gauss + qpow
        if not gauss:
            return m
        qpow = qpow * q
    return None


def reflect(d, vertex):
    """Reflect the diagram at a vertex.

    The reflected simple roots are (-a1, a2 + m*a1) for vertex 1 (and
    symmetrically for vertex 2), which keeps the map an involution.
    """
    m = cartan_entry(d, vertex)
    if m is None:
        raise ReflectionUndefined(f"no Cartan entry at vertex {vertex} of {d}")
    if vertex == 1:
        return GDD(d.q11, d.q22 * d.e ** m * d.q11 ** (m * m),
                   d.q11 ** (-2 * m) * d.e.inv())
    return GDD(d.q11 * d.e ** m * d.q22 ** (m * m), d.q22,
               d.q22 ** (-2 * m) * d.e.inv())


@dataclass(frozen=True)
class WeylVerdict:
    finite: bool
    reason: str
    positive_roots: tuple
    chambers: int

    def __bool__(self):
        return self.finite


def _positive(v):
    a, b = v
    return v if (a, b) > (0, 0) else (-a, -b)


def weyl_groupoid_finite(d, orbit_cap=ORBIT_CAP, root_cap=ROOT_CAP):
    """Walk the reflection groupoid of a rank-two diagram.

    Chambers carry the diagram together with its two simple roots written in
    the coordinates of the starting chamber.  The walk closes up on a finite
    set of chambers exactly when the root system is finite; a missing Cartan
    entry, a vertex label equal to 1, or unbounded root growth all certify an
    infinite Nichols algebra.
    """
    for v in (1, 2):
        q = d.vertex(v)
        if q == ONE:
            return WeylVerdict(False, f"vertex {v} has label 1", (), 0)
        try:
            order_of_root_of_unity(q)
        except NotRootOfUnity:
            return WeylVerdict(False, f"vertex {v} label is not a root of unity",
                               (), 0)
    start = (d, (1, 0), (0, 1))
    seen = {start}
    queue = [start]
    roots = {(1, 0), (0, 1)}
    while queue:
        diagram, r1, r2 = queue.pop()
        for v in (1, 2):
            m = cartan_entry(diagram, v)
            if m is None:
                return WeylVerdict(False,
                                   f"undefined Cartan entry at vertex {v}",
                                   (), len(seen))
            if v == 1:
                n1 = (-r1[0], -r1[1])
                n2 = (r2[0] + m * r1[0], r2[1] + m * r1[1])
            else:
                n1 = (r1[0] + m * r2[0], r1[1] + m * r2[1])
                n2 = (-r2[0], -r2[1])
            chamber = (reflect(diagram, v), n1, n2)
            if chamber in seen:
                continue
            roots.add(_positive(n1))
            roots.add(_positive(n2))
            if len(roots) > root_cap:
                return WeylVerdict(False, "root growth exceeds cap",
                                   (), len(seen))
            seen.add(chamber)
            if len(seen) > orbit_cap:
                return WeylVerdict(False, "chamber orbit exceeds cap",
                                   (), len(seen))
            queue.append(chamber)
    return WeylVerdict(True, "reflection walk closed up",
                       tuple(sorted(roots)), len(seen))


# ---------------------------------------------------------------------------
# diagrams attached to the catalog parameters


def gdd_h(i, j, k, iota):
    """Diagram of the rank-two diagonal space containing V[H](i,j,k,iota):
    the extra vertex carries -1, the module vertex and edge depend on the
    parameters."""
    return GDD(-ONE,
               sign((k + j) * (iota - 1)) * xi_pow(i * j),
               sign(k + iota - 1) * xi_pow(-j))


def gdd_k(i, j, k, iota):
    return GDD(-ONE,
               sign(k * iota) * xi_pow(-i * j),
               sign(i) * xi_pow(-j))


def gdd(side, params):
    i, j, k, iota = params
    return gdd_h(i, j, k, iota) if side == "H" else gdd_k(i, j, k, iota)


# ---------------------------------------------------------------------------
# the classification of parameter quadruples

# Six families on each side exhaust the finite Nichols algebras; the starred
# sets carry the infinite ones.  Membership is decided by congruences mod 6
# on the parameters; where a congruence pair involves a +- choice the sign is
# shared between the two conditions (the uncorrelated reading would break the
# tiling of the parameter space, see partition_audit).


def _lambda4():
    return frozenset({(i, 3, 0, 1) for i in (1, 3, 5)}
                     | {(i, 3, 1, 0) for i in (1, 3, 5)})


def _theta4():
    return frozenset({(i, 0, 1, 1) for i in (1, 3, 5)}
                     | {(i, 3, 1, 1) for i in (0, 2, 4)})


def _h_member(label, p):
    i, j, k, iota = p
    first = 3 * (k + iota - 1) - j
    second = 3 * (k + j) * (iota - 1) + i * j
    third = 3 * (k + iota) + 3 * (k + j) * (iota - 1) + (i - 1) * j
    if label == "Λ0*":
        return second % 6 == 0 or third % 6 == 0
    if label == "Λ0**":
        return i == 5 and j in (1, 5) and (k + iota + 1) % 2 == 0
    if label == "Λ1":
        return any((first - s) % 6 == 0 and (second - 3 - s) % 6 == 0
                   for s in (1, -1))
    if label == "Λ2":
        return any((first - s) % 6 == 0 and (second - s) % 6 == 0
                   for s in (2, -2))
    if label == "Λ3":
        return any((first + 2 * s) % 6 == 0 and (second - s) % 6 == 0
                   for s in (1, -1))
    if label == "Λ4":
        return p in _lambda4()
    if label == "Λ5":
        return p not in _lambda4() and second % 6 == 3
    if label == "Λ6":
        return p not in _lambda4() and third % 6 == 3
    if label == "Λ1*":
        return p in {(2, 2, 0, 0), (2, 4, 0, 0), (2, 1, 1, 0), (2, 5, 1, 0)}
    raise ValueError(f"unknown H-side label {label!r}")


def _k_member(label, p):
    i, j, k, iota = p
    first = 3 * k * iota - i * j
    second = 3 * k * iota + (3 - j) * (i + 1)
    if label == "Θ0*":
        return first % 6 == 0 or second % 6 == 0
    if label == "Θ0**":
        return p in {(1, 2, 1, 1), (1, 4, 1, 1), (4, 1, 1, 1), (4, 5, 1, 1)}
    if label == "Θ1":
        return k * iota == 0 and ((i == 1 and j in (2, 4))
                                  or (i == 4 and j in (1, 5)))
    if label == "Θ2":
        return ((i == 1 and j in (1, 5) and k * iota == 0)
                or (i == 4 and j in (2, 4) and k == 1 and iota == 1))
    if label == "Θ3":
        return ((i == 4 and j in (2, 4) and k * iota == 0)
                or (i == 1 and j in (1, 5) and k == 1 and iota == 1))
    if label == "Θ4":
        return p in _theta4()
    if label == "Θ5":
        return p not in _theta4() and first % 6 == 3
    if label == "Θ6":
        return p not in _theta4() and second % 6 == 3
    if label == "Θ1*":
        return p in {(1, 2, 0, 0), (1, 4, 0, 0), (1, 2, 0, 1), (1, 4, 0, 1)}
    raise ValueError(f"unknown K-side label {label!r}")


H_LABELS = ("Λ0*", "Λ0**", "Λ1", "Λ2", "Λ3", "Λ4", "Λ5", "Λ6")
K_LABELS = ("Θ0*", "Θ0**", "Θ1", "Θ2", "Θ3", "Θ4", "Θ5", "Θ6")
FINITE_LABELS = ("Λ1", "Λ2", "Λ3", "Λ4", "Λ5", "Λ6",
                 "Θ1", "Θ2", "Θ3", "Θ4", "Θ5", "Θ6")


def classify_param(side, params):
    """Labels of every family containing the parameter.

    A quadruple gets its family labels (plus the lifting-relevant starred
    sublabel when it applies); a character triple gets the one-dimensional
    label when its braiding scalar is -1.
    """
    if side not in ("H", "K"):
        raise ValueError(f"side must be 'H' or 'K', got {side!r}")
    if len(params) == 3:
        i, j, k = params
        if side == "H":
            return {"Λ0"} if (i * (j + k) + j) % 2 == 1 else set()
        return {"Θ0"} if (i * j + k) % 2 == 1 else set()
    member = _h_member if side == "H" else _k_member
    labels = H_LABELS if side == "H" else K_LABELS
    out = {label for label in labels if member(label, params)}
    star = "Λ1*" if side == "H" else "Θ1*"
    if member(star, params):
        out.add(star)
    return out


def class_params(side, label):
    """All parameter quadruples in one family, in lexicographic order."""
    domain = lambda_params() if side == "H" else theta_params()
    member = _h_member if side == "H" else _k_member
    return [p for p in domain if member(label, p)]


def expected_nichols_dimension(side, params):
    """Frozen dimension of the Nichols algebra for a finite-family quadruple
    (None when the parameter lies in an infinite family)."""
    i, j, k, iota = params
    labels = classify_param(side, params)
    if side == "H":
        if "Λ1" in labels:
            return 18
        if "Λ2" in labels or "Λ3" in labels:
            return 36
        if "Λ4" in labels:
            return 4
        if "Λ5" in labels:
            return 2 * order_of_root_of_unity(sign(k + iota - 1) * xi_pow(-j))
        if "Λ6" in labels:
            return 2 * order_of_root_of_unity(sign(iota + 1 + k) * xi_pow(j))
        return None
    if "Θ1" in labels:
        return 18
    if "Θ2" in labels or "Θ3" in labels:
        return 36
    if "Θ4" in labels:
        return 4
    if "Θ5" in labels:
        return 2 * order_of_root_of_unity(sign(i) * xi_pow(-j))
    if "Θ6" in labels:
        return 2 * order_of_root_of_unity(sign(i) * xi_pow(j))
    return None


# ---------------------------------------------------------------------------
# the audit

# Cardinalities the source text claims for the K-side families.  The literal
# set definitions give (12, 8, 8, 6, 12, 12); the claim disagrees on four of
# the six, and the audit reports both numbers side by side.
CLAIMED_K_COUNTS = {"Θ1": 12, "Θ2": 12, "Θ3": 12, "Θ4": 6, "Θ5": 15, "Θ6": 15}


@dataclass
class AuditReport:
    side: str
    counts: dict
    overlaps: list
    missing: list
    claimed: dict
    conflicts: list

    @property
    def covers(self):
        return not self.missing

    @property
    def disjoint(self):
        return not self.overlaps

    def lines(self):
        out = [f"{self.side}-side partition of 120 parameter quadruples:"]
        for label in sorted(self.counts):
            claim = self.claimed.get(label)
            note = "" if claim in (None, self.counts[label]) \
                else f"  (claimed {claim})"
            out.append(f"  {label:5s} {self.counts[label]:3d}{note}")
        out.append(f"  covers: {self.covers}   disjoint: {self.disjoint}")
        for a, b, n in self.overlaps:
            out.append(f"  overlap {a} & {b}: {n} parameters")
        for text in self.conflicts:
            out.append(f"  conflict: {text}")
        return out


def partition_audit(side):
    """Check that the eight families tile the 120-parameter space, count
    them, list overlaps, and compare with the claimed cardinalities."""
    domain = lambda_params() if side == "H" else theta_params()
    labels = H_LABELS if side == "H" else K_LABELS
    member = _h_member if side == "H" else _k_member
    sets = {label: frozenset(p for p in domain if member(label, p))
            for label in labels}
    counts = {label: len(sets[label]) for label in labels}
    union = frozenset().union(*sets.values())
    missing = sorted(set(domain) - union)
    overlaps = [(a, b, len(sets[a] & sets[b]))
                for a, b in combinations(labels, 2) if sets[a] & sets[b]]
    claimed = dict(CLAIMED_K_COUNTS) if side == "K" else {}
    conflicts = [f"{label}: computed {counts[label]}, claimed {claim}"
                 for label, claim in sorted(claimed.items())
                 if counts[label] != claim]
    star = "Λ1*" if side == "H" else "Θ1*"
    star_count = sum(1 for p in domain if member(star, p))
    counts[star] = star_count
    if star_count != 4:
        conflicts.append(f"{star}: computed {star_count}, expected 4")
    one = "Λ1" if side == "H" else "Θ1"
    if not sets[one] >= {p for p in domain if member(star, p)}:
        conflicts.append(f"{star} is not contained in {one}")
    return AuditReport(side, counts, overlaps, missing, claimed, conflicts)


def finiteness_verdicts(side):
    """Groupoid verdict for every quadruple, keyed by parameter."""
    domain = lambda_params() if side == "H" else theta_params()
    return {p: weyl_groupoid_finite(gdd(side, p)) for p in domain}
