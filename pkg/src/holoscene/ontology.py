"""Term-graph ontology built from plain-text corpora.

Nodes are the normalized vocabulary; an edge joins every pair of terms
that co-occur within one sentence or two adjacent sentences, weighted by
the raw number of such windows. When a relation pattern (e.g. "part of")
appears between two terms, the pair's edge carries that label instead of
the generic "related-to".

Alongside the graph, word statistics are extracted at four orders: average
word frequency, per-word frequency, pair frequency over 2-sentence
windows, and triple frequency over 3-sentence windows. These drive the
confabulation scoring.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path

from .errors import GraphFormatError, UnknownTermError, UnmappedTermError
from .lexicon import Lexicon, _TOKEN_RE, compile_patterns, default_lexicon, split_sentences

GENERIC_RELATION = "related-to"


@dataclass(frozen=True)
class EdgeRec:
    src: str
    dst: str
    label: str
    weight: float

    @property
    def pair(self) -> tuple:
        return tuple(sorted((self.src, self.dst)))


class OntologyGraph:
    """Undirected term graph; labeled edges keep their source direction."""

    def __init__(self):
        self.nodes: dict[str, str] = {}
        self._edges: dict[tuple, EdgeRec] = {}
        self._adjacency: dict[str, set] = {}

    def __contains__(self, term: str) -> bool:
        return term in self.nodes

    def __len__(self) -> int:
        return len(self.nodes)

    def add_node(self, term: str, semantic_type: str = "entity") -> None:
        self.nodes.setdefault(term, semantic_type)
        self._adjacency.setdefault(term, set())

    def add_edge(self, src: str, dst: str, label: str, weight: float) -> None:
        if src not in self.nodes or dst not in self.nodes:
            raise UnknownTermError(
                f"edge endpoints must be nodes: {src!r}, {dst!r}",
                [t for t in (src, dst) if t not in self.nodes],
            )
        if weight < 0:
            raise ValueError("edge weight must be non-negative")
        rec = EdgeRec(src, dst, label, weight)
        self._edges[rec.pair] = rec
        self._adjacency[src].add(dst)
        self._adjacency[dst].add(src)

    def edges(self) -> list:
        return [self._edges[k] for k in sorted(self._edges)]

    def edge_between(self, a: str, b: str) -> EdgeRec | None:
        return self._edges.get(tuple(sorted((a, b))))

    def neighbors(self, term: str, relations=None) -> list:
        """Sorted neighbor terms, optionally restricted to edge labels."""
        out = []
        for other in sorted(self._adjacency.get(term, ())):
            rec = self.edge_between(term, other)
            if relations is None or rec.label in relations:
                out.append(other)
        return out

    def induced(self, terms) -> "OntologyGraph":
        sub = OntologyGraph()
        keep = set(terms)
        for term in sorted(keep):
            if term in self.nodes:
                sub.add_node(term, self.nodes[term])
        for rec in self.edges():
            if rec.src in keep and rec.dst in keep:
                sub.add_edge(rec.src, rec.dst, rec.label, rec.weight)
        return sub


@dataclass(frozen=True)
class DkStatistics:
    """Word statistics at orders 0-3 (average, single, pair, triple)."""

    k0: float
    k1: dict
    k2: dict  # sorted (a, b) -> window count
    k3: dict  # sorted (a, b, c) -> window count

    def pair(self, a: str, b: str) -> float:
        return self.k2.get(tuple(sorted((a, b))), 0)

    def triple(self, a: str, b: str, c: str) -> float:
        return self.k3.get(tuple(sorted((a, b, c))), 0)

    @property
    def total_frequency(self) -> float:
        return sum(self.k1.values())

    def scaled(self, factor: float) -> "DkStatistics":
        return DkStatistics(
            k0=self.k0 * factor,
            k1={k: v * factor for k, v in self.k1.items()},
            k2={k: v * factor for k, v in self.k2.items()},
            k3={k: v * factor for k, v in self.k3.items()},
        )

    def validate(self) -> None:
        if self.k1:
            mean = sum(self.k1.values()) / len(self.k1)
            if abs(mean - self.k0) > 1e-9:
                raise ValueError("k0 must equal the mean of k1")
        for pair in self.k2:
            for term in pair:
                if term not in self.k1:
                    raise ValueError(f"k2 term {term!r} missing from k1")
        for triple in self.k3:
            for term in triple:
                if term not in self.k1:
                    raise ValueError(f"k3 term {term!r} missing from k1")


# -- corpus scanning ---------------------------------------------------------


def _sentence_term_lists(document: str, lex: Lexicon) -> list:
    return [lex.content_terms(s) for s in split_sentences(document)]


def _pair_windows(term_lists) -> list:
    sets = [set(t) for t in term_lists]
    if not sets:
        return []
    if len(sets) == 1:
        return [sets[0]]
    return [sets[i] | sets[i + 1] for i in range(len(sets) - 1)]


def _triple_windows(term_lists) -> list:
    sets = [set(t) for t in term_lists]
    if not sets:
        return []
    if len(sets) <= 2:
        merged = set()
        for s in sets:
            merged |= s
        return [merged]
    return [sets[i] | sets[i + 1] | sets[i + 2] for i in range(len(sets) - 2)]


def _match_relations(sentence: str, patterns, lex: Lexicon) -> list:
    """(src, dst, label) for each relation pattern between two content terms."""
    lowered = sentence.lower()
    tokens = []
    for m in _TOKEN_RE.finditer(lowered):
        token = m.group(0)
        if token in lex.stopwords:
            continue
        term = lex.normalize(token)
        if term and term not in lex.stopwords:
            tokens.append((m.start(), m.end(), term))

    spans = []
    for regex, _, label in patterns:  # already longest-first
        for m in regex.finditer(lowered):
            if any(m.start() < e and s < m.end() for s, e, _ in spans):
                continue
            spans.append((m.start(), m.end(), label))

    out = []
    for start, end, label in sorted(spans):
        before = [t for s, e, t in tokens if e <= start]
        after = [t for s, e, t in tokens if s >= end]
        if before and after and before[-1] != after[0]:
            out.append((before[-1], after[0], label))
    return out


def build_from_corpus(corpus, relation_lexicon=None, lexicon: Lexicon | None = None) -> OntologyGraph:
    """Vocabulary graph with co-occurrence edge weights over a corpus.

    ``corpus`` is a list of document strings; sentences split on .!? and
    windows never cross document boundaries. ``relation_lexicon`` maps a
    surface pattern to an edge label; unmatched pairs get "related-to".
    """
    lex = lexicon or default_lexicon()
    if relation_lexicon is None:
        patterns = lex.relation_patterns
    else:
        patterns = compile_patterns(relation_lexicon)

    graph = OntologyGraph()
    pair_counts: Counter = Counter()
    labels: dict[tuple, tuple] = {}
    for document in corpus:
        term_lists = _sentence_term_lists(document, lex)
        for terms in term_lists:
            for term in terms:
                graph.add_node(term, lex.semantic_type(term))
        for window in _pair_windows(term_lists):
            for a, b in combinations(sorted(window), 2):
                pair_counts[(a, b)] += 1
        for sentence in split_sentences(document):
            for src, dst, label in _match_relations(sentence, patterns, lex):
                labels.setdefault(tuple(sorted((src, dst))), (src, dst, label))

    for (a, b), count in sorted(pair_counts.items()):
        src, dst, label = labels.get((a, b), (a, b, GENERIC_RELATION))
        graph.add_edge(src, dst, label, count)
    return graph


def extract_dk(corpus, graph: OntologyGraph | None = None, lexicon: Lexicon | None = None) -> DkStatistics:
    """Word statistics over the same windows the graph was built from."""
    lex = lexicon or default_lexicon()
    k1: Counter = Counter()
    k2: Counter = Counter()
    k3: Counter = Counter()
    for document in corpus:
        term_lists = _sentence_term_lists(document, lex)
        for terms in term_lists:
            k1.update(terms)
        for window in _pair_windows(term_lists):
            for a, b in combinations(sorted(window), 2):
                k2[(a, b)] += 1
        for window in _triple_windows(term_lists):
            for a, b, c in combinations(sorted(window), 3):
                k3[(a, b, c)] += 1
    k0 = sum(k1.values()) / len(k1) if k1 else 0.0
    stats = DkStatistics(k0=k0, k1=dict(k1), k2=dict(k2), k3=dict(k3))
    if graph is not None:
        missing = [t for t in stats.k1 if t not in graph.nodes]
        if missing:
            raise UnknownTermError("statistics cover terms absent from the graph", missing)
    return stats


# -- expansion ---------------------------------------------------------------


@dataclass(frozen=True)
class Expansion:
    anchored: frozenset
    expanded: frozenset
    subgraph: OntologyGraph

    @property
    def reached(self) -> frozenset:
        return self.anchored | self.expanded


def expand(
    graph: OntologyGraph,
    anchors,
    relations=None,
    depth: int = 1,
    rules: dict | None = None,
) -> Expansion:
    """Breadth-first closure from the anchors along selected relations.

    ``relations`` limits which edge labels are followed (None follows all).
    ``rules`` is an optional term -> [term] rewrite table applied at each
    step, covering domain inferences that plain edges do not carry.
    """
    anchors = set(anchors)
    missing = sorted(a for a in anchors if a not in graph.nodes)
    if missing:
        raise UnknownTermError(f"anchors not in graph: {', '.join(missing)}", missing)

    reached = set(anchors)
    frontier = set(anchors)
    for _ in range(depth):
        nxt = set()
        for term in sorted(frontier):
            nxt.update(graph.neighbors(term, relations))
            for target in (rules or {}).get(term, ()):
                if target in graph.nodes:
                    nxt.add(target)
        nxt -= reached
        if not nxt:
            break
        reached |= nxt
        frontier = nxt
    return Expansion(
        anchored=frozenset(anchors),
        expanded=frozenset(reached - anchors),
        subgraph=graph.induced(reached),
    )


def load_rewrite_rules(path) -> dict:
    rules: dict[str, list] = {}
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        src, _, dst = line.partition("->")
        src, dst = src.strip(), dst.strip()
        if not src or not dst:
            raise ValueError(f"bad rewrite rule: {line!r}")
        rules.setdefault(src, []).append(dst)
    return rules


# -- asset and value mappings ------------------------------------------------


@dataclass(frozen=True)
class TermObjectMap:
    """Terms to renderable asset identifiers."""

    entries: dict

    def lookup(self, term: str) -> str:
        try:
            return self.entries[term]
        except KeyError:
            raise UnmappedTermError(f"no asset mapped for term {term!r}", [term]) from None

    def __contains__(self, term: str) -> bool:
        return term in self.entries

    @classmethod
    def load(cls, path) -> "TermObjectMap":
        entries = {}
        for raw in Path(path).read_text(encoding="utf-8").splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            term, obj = line.split(None, 1)
            entries[term] = obj.strip()
        return cls(entries)


@dataclass(frozen=True)
class ValueMap:
    """(fuzzy term, attribute type) to a numeric attribute value."""

    entries: dict

    def lookup(self, fuzzy: str, attribute: str) -> float:
        try:
            return self.entries[(fuzzy, attribute)]
        except KeyError:
            raise UnmappedTermError(
                f"no value mapped for ({fuzzy!r}, {attribute!r})", [fuzzy]
            ) from None

    def __contains__(self, key) -> bool:
        return tuple(key) in self.entries

    @classmethod
    def load(cls, path) -> "ValueMap":
        entries = {}
        for raw in Path(path).read_text(encoding="utf-8").splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fuzzy, attribute, value = line.split()
            entries[(fuzzy, attribute)] = float(value)
        return cls(entries)


# -- graph file format ---------------------------------------------------------


def save_graph(graph: OntologyGraph, path, dk: DkStatistics | None = None) -> None:
    """Line-oriented graph file: node/edge records plus optional freq and
    triple records carrying the word statistics."""
    lines = ["# holoscene graph v1"]
    for term in sorted(graph.nodes):
        lines.append(f"node {term} {graph.nodes[term]}")
    for rec in graph.edges():
        lines.append(f"edge {rec.src} {rec.dst} {rec.label} {rec.weight:g}")
    if dk is not None:
        for term in sorted(dk.k1):
            lines.append(f"freq {term} {dk.k1[term]:g}")
        for triple in sorted(dk.k3):
            lines.append(f"triple {triple[0]} {triple[1]} {triple[2]} {dk.k3[triple]:g}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_graph(path):
    """Read a graph file; returns (graph, statistics or None)."""
    graph = OntologyGraph()
    freq: dict[str, float] = {}
    k3: dict[tuple, float] = {}
    edge_lines = []
    for line_no, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        kind = fields[0]
        try:
            if kind == "node" and len(fields) == 3:
                graph.add_node(fields[1], fields[2])
            elif kind == "edge" and len(fields) == 5:
                edge_lines.append((line_no, fields[1], fields[2], fields[3], float(fields[4])))
            elif kind == "freq" and len(fields) == 3:
                freq[fields[1]] = float(fields[2])
            elif kind == "triple" and len(fields) == 5:
                k3[tuple(sorted(fields[1:4]))] = float(fields[4])
            else:
                raise ValueError(f"unrecognized record {kind!r}")
        except ValueError as exc:
            raise GraphFormatError(path, line_no, str(exc)) from None
    for line_no, src, dst, label, weight in edge_lines:
        try:
            graph.add_edge(src, dst, label, weight)
        except (UnknownTermError, ValueError) as exc:
            raise GraphFormatError(path, line_no, str(exc)) from None

    dk = None
    if freq:
        k2 = {rec.pair: rec.weight for rec in graph.edges()}
        dk = DkStatistics(k0=sum(freq.values()) / len(freq), k1=freq, k2=k2, k3=k3)
    return graph, dk


def to_dot(graph: OntologyGraph, colors: dict | None = None, name: str = "ontology") -> str:
    """DOT rendering; optional term -> fill color map."""
    lines = [f"graph {name} {{", "  node [style=filled, fillcolor=white];"]
    for term in sorted(graph.nodes):
        attrs = [f'label="{term}"']
        if colors and term in colors:
            attrs.append(f'fillcolor="{colors[term]}"')
        lines.append(f'  "{term}" [{", ".join(attrs)}];')
    for rec in graph.edges():
        lines.append(f'  "{rec.src}" -- "{rec.dst}" [label="{rec.label}", weight={rec.weight:g}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
