"""Censuses of central-charge-1/2 idempotents and their exact Gram data.

A census is an ordered list of labeled points together with (optionally) a
realization of every point in a Griess algebra.  Pairwise inner products of
distinct points are always 0 or 1/32; the Gram matrix is therefore stored as
a small integer code matrix (0 -> 0, 1 -> 1/32, 2 -> 1/4 on the diagonal,
3 -> not computable without a realization).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import gf2code, rootlat
from .gf2code import BinaryCode, HammingEmbedding
from .griess import GriessAlgebra, GriessElement

GRAM_ZERO, GRAM_32ND, GRAM_QUARTER, GRAM_UNKNOWN = 0, 1, 2, 3
_GRAM_VALUE = {GRAM_ZERO: Fraction(0), GRAM_32ND: Fraction(1, 32),
               GRAM_QUARTER: Fraction(1, 4)}


class CensusError(ValueError):
    pass


class UnrealizedGramError(CensusError):
    """Raised when cross-block Gram data is requested without a realization."""


@dataclass(frozen=True)
class IsingPoint:
    """A labeled census point.

    kind: frame | hamming | wminus | wplus | twist.
    data: frame -> coordinate index; hamming -> (embedding index, coset rep);
    wminus/wplus -> root-pair index; twist -> (coset key, coset kind).
    """

    kind: str
    data: tuple

    def label(self) -> str:
        if self.kind == "frame":
            return f"frame:{self.data[0]}"
        if self.kind == "hamming":
            return f"hamming:{self.data[0]}:{self.data[1]}"
        if self.kind in ("wminus", "wplus"):
            return f"{self.kind}:{self.data[0]}"
        return f"twist:{''.join(map(str, self.data[0]))}:{self.data[1]}"

    def to_json(self) -> dict:
        out = {"tag": self.kind}
        if self.kind == "frame":
            out["coordinate"] = self.data[0]
        elif self.kind == "hamming":
            out["embedding"] = self.data[0]
            out["coset"] = self.data[1]
        elif self.kind in ("wminus", "wplus"):
            out["pair"] = self.data[0]
        else:
            out["coset_key"] = "".join(map(str, self.data[0]))
            out["coset_kind"] = self.data[1]
        return out


class IsingCensus:
    """Ordered points, optional realizations, and the coded Gram matrix."""

    def __init__(self, points: list[IsingPoint],
                 elements: list[GriessElement] | None,
                 gram: np.ndarray, source: str,
                 frame_size: int | None = None,
                 algebra: GriessAlgebra | None = None,
                 embeddings: list[HammingEmbedding] | None = None):
        self.points = points
        self.elements = elements
        self.gram = gram
        self.source = source
        self.frame_size = frame_size
        self.algebra = algebra
        self.embeddings = embeddings
        self._elem_index = None

    def __len__(self) -> int:
        return len(self.points)

    def counts_by_kind(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for p in self.points:
            out[p.kind] = out.get(p.kind, 0) + 1
        return dict(sorted(out.items()))

    def gram_value(self, i: int, j: int) -> Fraction:
        code = int(self.gram[i, j])
        if code == GRAM_UNKNOWN:
            raise UnrealizedGramError(
                f"gram({i},{j}) needs a lattice realization ({self.source})")
        return _GRAM_VALUE[code]

    def has_unknown_gram(self) -> bool:
        return bool((self.gram == GRAM_UNKNOWN).any())

    def element_index(self, e: GriessElement) -> int:
        if self.elements is None:
            raise CensusError("census carries no realizations")
        if self._elem_index is None:
            self._elem_index = {el.key(): i for i, el in enumerate(self.elements)}
        try:
            return self._elem_index[e.key()]
        except KeyError:
            raise CensusError("element is not a census point") from None

    def subcensus(self, indices: list[int], source: str) -> "IsingCensus":
        idx = list(indices)
        elems = None if self.elements is None else [self.elements[i] for i in idx]
        gram = self.gram[np.ix_(idx, idx)].copy()
        return IsingCensus([self.points[i] for i in idx], elems, gram, source,
                           frame_size=self.frame_size, algebra=self.algebra,
                           embeddings=self.embeddings)

    def to_json(self, include_gram: bool = True) -> dict:
        out = {
            "source": self.source,
            "count": len(self.points),
            "counts_by_tag": self.counts_by_kind(),
            "points": [p.to_json() for p in self.points],
        }
        if include_gram:
            legend = {"0": "0", "1": "1/32", "2": "1/4", "3": "unrealized"}
            out["gram_legend"] = legend
            out["gram_dense"] = ["".join(str(int(x)) for x in row)
                                 for row in self.gram]
        return out


def gram_from_elements(elements: list[GriessElement]) -> np.ndarray:
    """Coded Gram matrix of realized points; validates the 0 / 1-32 / 1-4 law."""
    n = len(elements)
    if n == 0:
        return np.zeros((0, 0), dtype=np.int8)
    alg = elements[0].alg
    s4 = alg.s2 * alg.s2
    dens = np.array([e.den for e in elements], dtype=np.int64)
    carts = np.stack([e.cart.ravel() for e in elements])
    xvs = np.stack([e.xv for e in elements])
    num = 2 * (carts @ carts.T) + 2 * s4 * (xvs @ xvs.T)
    dd = s4 * np.outer(dens, dens)
    gram = np.full((n, n), -1, dtype=np.int8)
    gram[num == 0] = GRAM_ZERO
    gram[num * 32 == dd] = GRAM_32ND
    gram[num * 4 == dd] = GRAM_QUARTER
    if (gram < 0).any():
        i, j = map(int, np.argwhere(gram < 0)[0])
        raise CensusError(
            f"inner product of points {i},{j} is {Fraction(int(num[i, j]), int(dd[i, j]))},"
            " outside {0, 1/32, 1/4}")
    if not (np.diag(gram) == GRAM_QUARTER).all():
        raise CensusError("a census point does not have norm 1/4")
    return gram


# ---------------------------------------------------------------------------
# lattice censuses

def lattice_census(lattice: rootlat.RootLattice,
                   algebra: GriessAlgebra | None = None) -> IsingCensus:
    """All norm-1/4 idempotents of the degree-2 algebra of an ADE lattice.

    For every root pair both frame vectors; for rank-8 E-type lattices also
    the 2^8 twists of wtilde, labeled by cosets mod 2.
    """
    algebra = algebra or GriessAlgebra(lattice)
    points: list[IsingPoint] = []
    elements: list[GriessElement] = []
    for p in range(lattice.npairs):
        points.append(IsingPoint("wminus", (p,)))
        elements.append(algebra.w_vector(p, -1).element)
    for p in range(lattice.npairs):
        points.append(IsingPoint("wplus", (p,)))
        elements.append(algebra.w_vector(p, 1).element)
    if lattice.kind == "E" and lattice.rank == 8:
        wt = algebra.conformal_wtilde().element
        for cl in lattice.mod2_classes():
            points.append(IsingPoint("twist", (cl.key, cl.kind)))
            elements.append(algebra.phi_twist(cl.representative, wt))
    gram = gram_from_elements(elements)
    return IsingCensus(points, elements, gram, f"lattice:{lattice.name}",
                       frame_size=2 * lattice.rank, algebra=algebra)


def commutant_filter(census: IsingCensus,
                     constraints: list[GriessElement], source: str) -> IsingCensus:
    """Sub-census of points orthogonal to every constraint vector."""
    if census.elements is None:
        raise CensusError("commutant filter needs realized census points")
    keep = [i for i, e in enumerate(census.elements)
            if all(e.inner(c) == 0 for c in constraints)]
    return census.subcensus(keep, source)


# ---------------------------------------------------------------------------
# code censuses

def _coset_reps(embedding: HammingEmbedding) -> list[int]:
    """The 16 cosets of the embedded subcode on its support.

    Representatives have minimal weight on the support, ties broken by
    numeric value; returned sorted.
    """
    support_bits = 0
    for i in embedding.support:
        support_bits |= 1 << i
    sub_words = embedding.words
    seen: set[int] = set()
    reps = []
    support = list(embedding.support)
    for dense in range(256):
        word = 0
        for k, i in enumerate(support):
            if (dense >> k) & 1:
                word |= 1 << i
        coset = frozenset(word ^ w for w in sub_words)
        if coset in seen:
            continue
        seen.add(coset)
        reps.append(min(coset, key=lambda w: (gf2code.weight(w), w)))
    if len(reps) != 16:
        raise CensusError(f"embedding has {len(reps)} cosets, expected 16")
    return sorted(reps)


def code_census(code: BinaryCode, realize: str | None = None) -> IsingCensus:
    """Frame points plus 16 points per Hamming-type embedding.

    `realize` names a paired lattice model (see `paired_model`) used to
    attach exact algebra elements; without it, cross-embedding Gram entries
    are marked unrealized.
    """
    if code.rank == 0:
        raise CensusError("census of the zero code is empty of structure")
    if code.min_weight() <= 2:
        raise CensusError("code has a word of weight <= 2: census is not finite")
    embeddings = gf2code.hamming_embeddings(code)
    points: list[IsingPoint] = [IsingPoint("frame", (i,)) for i in range(code.length)]
    block_cosets: list[list[int]] = []
    for ei, emb in enumerate(embeddings):
        reps = _coset_reps(emb)
        block_cosets.append(reps)
        for rep in reps:
            points.append(IsingPoint("hamming", (ei, rep)))
    if realize is not None:
        elements, algebra = _realize_code_census(code, embeddings, block_cosets,
                                                 points, realize)
        gram = gram_from_elements(elements)
        return IsingCensus(points, elements, gram, f"code:{realize}",
                           frame_size=code.length, algebra=algebra,
                           embeddings=embeddings)
    gram = _combinatorial_gram(code, embeddings, block_cosets, points)
    return IsingCensus(points, None, gram, "code:unrealized",
                       frame_size=code.length, embeddings=embeddings)


def _combinatorial_gram(code, embeddings, block_cosets, points) -> np.ndarray:
    """Gram entries defined without a realization; cross-block pairs unknown."""
    n = len(points)
    gram = np.full((n, n), GRAM_UNKNOWN, dtype=np.int8)
    np.fill_diagonal(gram, GRAM_QUARTER)
    L = code.length
    gram[:L, :L] = GRAM_ZERO
    np.fill_diagonal(gram[:L, :L], GRAM_QUARTER)
    offset = L
    for emb, reps in zip(embeddings, block_cosets):
        support_bits = 0
        for i in emb.support:
            support_bits |= 1 << i
        for a, rep in enumerate(reps):
            for i in range(L):
                c = GRAM_32ND if i in emb.support else GRAM_ZERO
                gram[offset + a, i] = c
                gram[i, offset + a] = c
            for b in range(a + 1, 16):
                par = gf2code.weight((rep ^ reps[b]) & support_bits) & 1
                c = GRAM_32ND if par else GRAM_ZERO
                gram[offset + a, offset + b] = c
                gram[offset + b, offset + a] = c
        offset += 16
    return gram


def paired_model(code: BinaryCode) -> str | None:
    """Catalog lattice model whose census realizes this code's census."""
    if code == gf2code.named_code("reed_muller", 2, 4):
        return "E8H"
    if code.length % 4 == 0:
        n = code.length // 4
        if n >= 1 and code == gf2code.structure_code_dplus(n):
            return f"D{2 * n}C"
    return None


def _realize_code_census(code, embeddings, block_cosets, points, model_tag):
    """Match census labels with idempotents of the paired lattice algebra.

    Frame slot 2i / 2i+1 maps to the minus / plus vector over the i-th
    coordinate axis root.  Each embedding block is matched by its Gram row
    against the frame realizations, anchored and translated by the
    involutions of in-support frame points.
    """
    lattice = rootlat.build_lattice(model_tag)
    if code.length != 2 * lattice.ambient:
        raise CensusError(f"code length {code.length} does not pair with {model_tag}")
    algebra = GriessAlgebra(lattice)
    base = lattice_census(lattice, algebra)
    axis_pairs = []
    for i in range(lattice.ambient):
        v = np.zeros(lattice.ambient, dtype=np.int64)
        v[i] = 2
        axis_pairs.append(lattice.pair_of(v))
    frame_elems: list[GriessElement] = []
    for i in range(lattice.ambient):
        frame_elems.append(algebra.w_vector(axis_pairs[i], -1).element)
        frame_elems.append(algebra.w_vector(axis_pairs[i], 1).element)
    elements: list[GriessElement | None] = list(frame_elems)
    elements += [None] * (len(points) - len(frame_elems))
    used = {e.key() for e in frame_elems}
    # inner products of every lattice census point against the frame slots
    rows = [tuple(e.inner(f) for f in frame_elems) for e in base.elements]
    offset = code.length
    for emb, reps in zip(embeddings, block_cosets):
        desired = tuple(Fraction(1, 32) if j in emb.support else Fraction(0)
                        for j in range(code.length))
        cands = [e for e, row in zip(base.elements, rows)
                 if row == desired and e.key() not in used]
        if len(cands) != 16:
            raise CensusError(
                f"embedding matching found {len(cands)} candidates, expected 16")
        anchor = min(cands, key=lambda e: e.key())
        placed = _translate_block(algebra, frame_elems, emb, reps, anchor, cands)
        for a, rep in enumerate(reps):
            elements[offset + a] = placed[rep]
            used.add(placed[rep].key())
        offset += 16
    if any(e is None for e in elements):
        raise CensusError("realization left unplaced points")
    return elements, algebra


def _translate_block(algebra, frame_elems, emb, reps, anchor, cands):
    """Label the 16 block candidates by cosets via frame-involution translations.

    The flip group on the support acts simply transitively on the block:
    starting from an anchor labeled by the minimal-weight coset, each
    single-coordinate involution translates the label.  Revisits are checked
    for consistency, which verifies that subcode translations act trivially.
    """
    support = list(emb.support)
    cand_keys = {e.key() for e in cands}
    sub_words = set(emb.words)
    zero_rep = min(reps, key=lambda w: (gf2code.weight(w), w))
    placed = {zero_rep: anchor}
    frontier = [zero_rep]
    while frontier:
        cur = frontier.pop()
        for i in support:
            target_rep = _rep_of(cur ^ (1 << i), sub_words, reps)
            img = algebra.sigma_image(frame_elems[i], placed[cur])
            if img.key() not in cand_keys:
                raise CensusError("translated block point left the candidate set")
            if target_rep in placed:
                if placed[target_rep] != img:
                    raise CensusError("inconsistent block translation")
                continue
            placed[target_rep] = img
            frontier.append(target_rep)
    if len(placed) != 16:
        raise CensusError("block translation did not reach all 16 cosets")
    return placed


def _rep_of(word, sub_words, reps):
    coset = {word ^ w for w in sub_words}
    for r in reps:
        if r in coset:
            return r
    raise CensusError("coset representative lookup failed")


# ---------------------------------------------------------------------------
# type-preservation parity test

def sigma_type_check(code: BinaryCode, embedding: HammingEmbedding) -> bool:
    """True iff every codeword meets the embedding support evenly."""
    if code.min_weight() == 2:
        raise CensusError("code has weight-2 words")
    support_bits = 0
    for i in embedding.support:
        support_bits |= 1 << i
    return all(gf2code.weight(w & support_bits) % 2 == 0 for w in code.words())


# ---------------------------------------------------------------------------
# the 24-point model of the [8,4,4] code

def hamming_model() -> IsingCensus:
    """The 24-point census of the [8,4,4] code, realized in its paired lattice."""
    code = gf2code.hamming8_code()
    return code_census(code, realize=paired_model(code))
