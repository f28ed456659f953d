"""Blending: shared structure across mental spaces, holographic subgraph
coding, vital-relation compression, and graph confabulation.

Confabulation pulls unmentioned concepts into the blend. A candidate d is
scored by the product, over the generic-space terms g, of the probability
of walking from g to d in at most ``max_path`` steps. Step weights come
from the word statistics: the observed pair frequency relative to the
source's frequency, smoothed with the target's relative frequency, and a
boost when a step triple was itself observed. Scores are normalized by
the maximum so the acceptance threshold is scale-free, and scaling every
frequency by a positive constant provably leaves the ranking unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from . import hrr
from .errors import GraphFormatError, UnknownTermError
from .lexicon import default_lexicon
from .ontology import DkStatistics, OntologyGraph
from .textfilter import MentalSpace

ANCHORED = "anchored"
EXPANDED = "expanded"
CONFABULATED = "confabulated"

DOT_COLORS = {ANCHORED: "yellow", EXPANDED: "red", CONFABULATED: "blue"}


class VitalRelation(str, Enum):
    TIME = "Time"
    SPACE = "Space"
    IDENTITY = "Identity"
    ROLE = "Role"
    CAUSE_EFFECT = "Cause-Effect"
    CHANGE = "Change"
    INTENTIONALITY = "Intentionality"
    REPRESENTATIONS = "Representations"
    ATTRIBUTES = "Attributes"


@dataclass(frozen=True)
class GenericSpace:
    """Terms the input spaces have in common, with the space pairs each
    shared term connects."""

    shared: frozenset
    correspondences: frozenset  # (space_index, space_index, term)


@dataclass(frozen=True)
class BlendedSpace:
    """The imagined concept set: per-term score in [0, 1], how each term
    entered the blend, and the induced ontology fragment."""

    scores: dict
    provenance: dict
    subgraph: OntologyGraph = field(compare=False)

    @property
    def terms(self) -> frozenset:
        return frozenset(self.scores)

    def by_provenance(self, kind: str) -> frozenset:
        return frozenset(t for t, p in self.provenance.items() if p == kind)


def generic_space(spaces) -> GenericSpace:
    """Terms present in at least two spaces; a lone space contributes its
    anchored terms."""
    spaces = list(spaces)
    if not spaces:
        raise ValueError("generic_space requires at least one mental space")
    if len(spaces) == 1:
        return GenericSpace(shared=frozenset(spaces[0].anchored), correspondences=frozenset())
    holders: dict[str, list] = {}
    for space in spaces:
        for term in space.terms:
            holders.setdefault(term, []).append(space.sentence_index)
    shared = frozenset(t for t, idx in holders.items() if len(idx) >= 2)
    correspondences = frozenset(
        (i, j, term)
        for term in shared
        for n, i in enumerate(holders[term])
        for j in holders[term][n + 1 :]
    )
    return GenericSpace(shared=shared, correspondences=correspondences)


def encode_subgraph(path_terms, book: hrr.Codebook) -> hrr.Vector:
    """Fold an alternating node/edge/node... term path into one vector by
    chained convolution."""
    if len(path_terms) % 2 == 0:
        raise ValueError("path must alternate node, edge, node: odd length required")
    trace = book.vector(path_terms[0])
    for term in path_terms[1:]:
        trace = hrr.convolve(trace, book.vector(term))
    return trace


def decode_probe(trace, probe, book: hrr.Codebook):
    """Unbind ``probe`` from ``trace`` and clean the result up against the
    codebook; returns (term, similarity)."""
    return hrr.cleanup(hrr.correlate(probe, trace), book)


def renormalize(fragment: OntologyGraph, vital_map: dict | None = None) -> OntologyGraph:
    """Compress a fragment down to its vital relations.

    Keeps only edges whose label maps to a vital relation and drops any
    node left without edges. Idempotent by construction.
    """
    if vital_map is None:
        vital_map = default_lexicon().vital_map
    for label, name in vital_map.items():
        if name not in VitalRelation._value2member_map_:
            raise ValueError(f"{label!r} maps to unknown vital relation {name!r}")
    out = OntologyGraph()
    kept = [rec for rec in fragment.edges() if rec.label in vital_map]
    for rec in kept:
        for term in (rec.src, rec.dst):
            out.add_node(term, fragment.nodes[term])
    for rec in kept:
        out.add_edge(rec.src, rec.dst, rec.label, rec.weight)
    return out


# -- dK walk scoring -----------------------------------------------------------


def _step_weight(dk: DkStatistics, a: str, b: str, mix: float) -> float:
    observed = dk.pair(a, b) / dk.k1[a]
    background = dk.k1[b] / dk.total_frequency
    return mix * observed + (1.0 - mix) * background


def _path_score(dk: DkStatistics, path, mix: float) -> float:
    score = 1.0
    for a, b in zip(path, path[1:]):
        score *= _step_weight(dk, a, b, mix)
    for a, b, c in zip(path, path[1:], path[2:]):
        observed = dk.triple(a, b, c)
        if observed:
            score *= 1.0 + observed / dk.pair(a, b)
    return score


def reach_scores(
    graph: OntologyGraph, dk: DkStatistics, source: str, max_path: int = 3, mix: float = 0.5
) -> dict:
    """Raw reachability mass from ``source`` to every other node, summed
    over all simple paths of at most ``max_path`` steps."""
    if source not in graph.nodes:
        raise UnknownTermError(f"term not in graph: {source!r}", [source])
    raw: dict[str, float] = {}

    def walk(path, score):
        here = path[-1]
        if len(path) > 1:
            raw[here] = raw.get(here, 0.0) + score
        if len(path) > max_path:
            return
        for nxt in graph.neighbors(here):
            if nxt in path:
                continue
            walk(path + (nxt,), score * _segment(path, nxt))

    def _segment(path, nxt):
        # incremental step weight plus the triple boost it completes
        weight = _step_weight(dk, path[-1], nxt, mix)
        if len(path) >= 2:
            observed = dk.triple(path[-2], path[-1], nxt)
            if observed:
                weight *= 1.0 + observed / dk.pair(path[-2], path[-1])
        return weight

    walk((source,), 1.0)
    return raw


def transition_probability(
    graph: OntologyGraph,
    dk: DkStatistics,
    from_term: str,
    to_term: str,
    max_path: int = 3,
    mix: float = 0.5,
) -> float:
    """Probability of reaching ``to_term`` from ``from_term``, normalized
    so one source's probabilities over all targets sum to at most 1."""
    for term in (from_term, to_term):
        if term not in graph.nodes:
            raise UnknownTermError(f"term not in graph: {term!r}", [term])
    if from_term == to_term:
        return 1.0
    raw = reach_scores(graph, dk, from_term, max_path, mix)
    total = sum(raw.values())
    if total == 0.0:
        return 0.0
    return raw.get(to_term, 0.0) / total


def candidate_scores(
    generic_terms,
    graph: OntologyGraph,
    dk: DkStatistics,
    max_path: int = 3,
    mix: float = 0.5,
) -> dict:
    """Raw confabulation score for every non-generic node: the product of
    per-source transition probabilities."""
    sources = sorted(generic_terms)
    missing = [t for t in sources if t not in graph.nodes]
    if missing:
        raise UnknownTermError("generic terms not in graph", missing)
    per_source = []
    for source in sources:
        raw = reach_scores(graph, dk, source, max_path, mix)
        total = sum(raw.values())
        per_source.append((raw, total))
    scores = {}
    for term in sorted(graph.nodes):
        if term in generic_terms:
            continue
        product = 1.0
        for raw, total in per_source:
            product *= raw.get(term, 0.0) / total if total else 0.0
        scores[term] = product
    return scores


def confabulate(
    generic: GenericSpace,
    graph: OntologyGraph,
    dk: DkStatistics,
    threshold: float = 0.05,
    max_path: int = 3,
    mix: float = 0.5,
    anchored=frozenset(),
) -> BlendedSpace:
    """Blend the generic space with the best-supported outside concepts.

    The highest-scoring candidate always joins; others join when their
    score, relative to that maximum, clears ``threshold``. ``anchored``
    marks which blend terms were mentioned outright, for provenance.
    """
    if not generic.shared:
        raise ValueError("confabulate requires a non-empty generic space")
    raw = candidate_scores(generic.shared, graph, dk, max_path, mix)
    peak = max(raw.values(), default=0.0)

    accepted: dict[str, float] = {}
    if peak > 0.0:
        argmax = next(t for t in sorted(raw) if raw[t] == peak)
        for term in sorted(raw):
            relative = raw[term] / peak
            if term == argmax or relative >= threshold:
                accepted[term] = relative

    scores = {t: 1.0 for t in generic.shared}
    scores.update(accepted)
    provenance = {}
    for term in scores:
        if term in anchored:
            provenance[term] = ANCHORED
        elif term in generic.shared:
            provenance[term] = EXPANDED
        else:
            provenance[term] = CONFABULATED
    return BlendedSpace(
        scores=scores, provenance=provenance, subgraph=graph.induced(scores)
    )


def absorb_anchored(blend: BlendedSpace, anchored, graph: OntologyGraph) -> BlendedSpace:
    """Fold the mentioned terms into a blend at full score: the text's own
    words are always part of the imagined scene."""
    scores = dict(blend.scores)
    provenance = dict(blend.provenance)
    for term in sorted(anchored):
        if term not in graph.nodes:
            raise UnknownTermError(f"anchored term not in graph: {term!r}", [term])
        scores[term] = 1.0
        provenance[term] = ANCHORED
    return BlendedSpace(scores=scores, provenance=provenance, subgraph=graph.induced(scores))


# -- blend file format ---------------------------------------------------------


def save_blend(blend: BlendedSpace, path) -> None:
    """Graph-format file with extra ``score <term> <value> <provenance>``
    records."""
    lines = ["# holoscene blend v1"]
    for term in sorted(blend.subgraph.nodes):
        lines.append(f"node {term} {blend.subgraph.nodes[term]}")
    for rec in blend.subgraph.edges():
        lines.append(f"edge {rec.src} {rec.dst} {rec.label} {rec.weight:g}")
    for term in sorted(blend.scores):
        lines.append(f"score {term} {blend.scores[term]!r} {blend.provenance[term]}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_blend(path) -> BlendedSpace:
    subgraph = OntologyGraph()
    scores: dict[str, float] = {}
    provenance: dict[str, str] = {}
    edge_lines = []
    for line_no, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        try:
            if fields[0] == "node" and len(fields) == 3:
                subgraph.add_node(fields[1], fields[2])
            elif fields[0] == "edge" and len(fields) == 5:
                edge_lines.append((line_no, fields[1], fields[2], fields[3], float(fields[4])))
            elif fields[0] == "score" and len(fields) == 4:
                if fields[3] not in (ANCHORED, EXPANDED, CONFABULATED):
                    raise ValueError(f"unknown provenance {fields[3]!r}")
                scores[fields[1]] = float(fields[2])
                provenance[fields[1]] = fields[3]
            else:
                raise ValueError(f"unrecognized record {fields[0]!r}")
        except ValueError as exc:
            raise GraphFormatError(path, line_no, str(exc)) from None
    for line_no, src, dst, label, weight in edge_lines:
        try:
            subgraph.add_edge(src, dst, label, weight)
        except (UnknownTermError, ValueError) as exc:
            raise GraphFormatError(path, line_no, str(exc)) from None
    return BlendedSpace(scores=scores, provenance=provenance, subgraph=subgraph)


def blend_to_dot(blend: BlendedSpace, name: str = "blend") -> str:
    """DOT with the provenance coloring convention (anchored yellow,
    expanded red, confabulated blue)."""
    from .ontology import to_dot

    colors = {t: DOT_COLORS[p] for t, p in blend.provenance.items()}
    return to_dot(blend.subgraph, colors=colors, name=name)
