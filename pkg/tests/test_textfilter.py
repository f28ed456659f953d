"""Parser and mental-space tests, driven by the committed gold-parse
fixture plus targeted rule checks."""

import json
from pathlib import Path

import pytest

from holoscene.errors import UnparseableSentenceError, VocabularyGapError
from holoscene.lexicon import default_lexicon
from holoscene.ontology import build_from_corpus
from holoscene.textfilter import (
    MentalSpace,
    UniversalStructure,
    build_mental_space,
    parse_sentence,
    parse_text,
    split_clauses,
)

DATA = Path(__file__).parent / "data"
GOLD = json.loads((DATA / "gold_parses.json").read_text())


def as_dict(structure):
    return {
        "active": structure.active_actor,
        "action": structure.action,
        "passive": structure.passive_actor,
        "attributes": [list(a) for a in structure.attributes],
        "location": structure.location,
    }


class TestGoldParses:
    @pytest.mark.parametrize("case", GOLD, ids=[c["text"][:40] for c in GOLD])
    def test_fixture_text(self, case):
        structures = parse_text(case["text"])
        assert [as_dict(s) for s in structures] == case["structures"]

    def test_deterministic(self):
        text = GOLD[0]["text"]
        assert parse_text(text) == parse_text(text)


class TestParseRules:
    def test_simple_svo_with_location(self):
        s = parse_sentence("A woman walks on the beach.")
        assert s == UniversalStructure(
            action="walk", active_actor="woman", location="beach"
        )

    def test_transitive(self):
        s = parse_sentence("A woman takes this ball.")
        assert (s.active_actor, s.action, s.passive_actor) == ("woman", "take", "ball")
        assert s.location is None

    def test_passive_yields_unknown_actor(self):
        s = parse_sentence("The blue ball was left on the beach.")
        assert s.active_actor is None
        assert s.action == "leave"
        assert s.passive_actor == "ball"
        assert s.attributes == (("ball", "blue"),)
        assert s.location == "beach"

    def test_progressive_keeps_subject_active(self):
        s = parse_sentence("The woman was walking on the beach.")
        assert (s.active_actor, s.action) == ("woman", "walk")

    def test_bare_copula(self):
        s = parse_sentence("The ball is red.")
        assert (s.active_actor, s.action) == ("ball", "be")
        assert s.attributes == (("ball", "red"),)

    def test_existential_there(self):
        s = parse_sentence("There was a blue ball on the beach.")
        assert (s.active_actor, s.action, s.location) == ("ball", "be", "beach")

    def test_prepositional_object(self):
        s = parse_sentence("The girl plays with a ball.")
        assert (s.active_actor, s.action, s.passive_actor) == ("girl", "play", "ball")

    def test_no_verb_is_unparseable(self):
        with pytest.raises(UnparseableSentenceError) as err:
            parse_sentence("The green door.")
        assert err.value.text == "The green door."

    def test_empty_sentence_is_unparseable(self):
        with pytest.raises(UnparseableSentenceError):
            parse_sentence("   ")


class TestPronouns:
    def test_she_resolves_to_recent_female(self):
        context = [parse_sentence("A woman walks on the beach.")]
        s = parse_sentence("She takes the ball.", context)
        assert s.active_actor == "woman"

    def test_it_resolves_to_recent_inanimate(self):
        context = parse_text("A woman holds the ball.")
        s = parse_sentence("It was left on the beach.", context)
        assert s.passive_actor == "ball"

    def test_horizon_limits_lookback(self):
        structures = parse_text(
            "A woman walks on the beach. The sun shines. The waves reach the sand."
        )
        s = parse_sentence("She kicks the ball.", structures)
        assert s.active_actor is None  # woman is three sentences back

    def test_gender_mismatch_skips_candidate(self):
        context = parse_text("The man holds the ball.")
        s = parse_sentence("She kicks the ball.", context)
        assert s.active_actor is None


class TestClauses:
    def test_verb_conjunction_splits(self):
        assert split_clauses("She takes the ball and kicks it.") == [
            "she takes the ball",
            "kicks it",
        ]

    def test_noun_conjunction_does_not_split(self):
        assert split_clauses("The man and the woman walk.") == ["the man and the woman walk"]

    def test_split_clause_inherits_subject(self):
        structures = parse_text("She takes the ball and kicks it.", default_lexicon())
        # no antecedent for "she": unknown, but the kick clause inherits nothing
        assert [s.action for s in structures] == ["take", "kick"]
        structures = parse_text("A woman takes the ball and kicks it.")
        assert structures[1].active_actor == "woman"
        assert structures[1].passive_actor == "ball"


DEMO_CORPUS = [
    "A woman walks on the beach. The woman wears clothing. The woman has a body. "
    "The beach has sand. The ocean is near the beach. The sky is near the beach. "
    "A woman takes this ball. The ball is on the beach."
]


class TestMentalSpace:
    @pytest.fixture()
    def graph(self):
        return build_from_corpus(DEMO_CORPUS)

    def test_anchors_and_expansion(self, graph):
        s = parse_sentence("A woman walks on the beach.")
        space = build_mental_space(
            s, graph, depth=1, relations={"wears", "has-a", "near", "located-on"}
        )
        assert space.anchored == {"woman", "walk", "beach"}
        assert {"ocean", "sky", "clothing"} <= space.expanded
        assert space.anchored.isdisjoint(space.expanded)

    def test_depth_zero_has_no_expansion(self, graph):
        s = parse_sentence("A woman takes this ball.")
        space = build_mental_space(s, graph, depth=0)
        assert space.expanded == frozenset()

    def test_isolated_terms_expand_to_nothing(self):
        graph = build_from_corpus(["The woman walks."])  # woman-walk edge only
        space = build_mental_space(
            parse_sentence("The woman walks."), graph, depth=2, relations={"wears"}
        )
        assert space.expanded == frozenset()

    def test_missing_vocabulary_is_reported(self, graph):
        s = parse_sentence("A zeppelin flies over the beach.")
        with pytest.raises(VocabularyGapError) as err:
            build_mental_space(s, graph, depth=1)
        assert "zeppelin" in err.value.terms

    def test_copula_anchors_participants_only(self, graph):
        # "be" is a stative linker: never an ontology node, never anchored
        s = parse_sentence("The ball is on the beach.")
        assert s.action == "be"
        assert s.terms() == ["ball", "beach"]
        space = build_mental_space(s, graph, depth=0)
        assert space.anchored == {"ball", "beach"}

    def test_anchored_terms_occur_in_sentence(self, graph):
        # round-trip: every anchored term is a normalized sentence token
        lex = default_lexicon()
        for text in ("A woman walks on the beach.", "A woman takes this ball."):
            s = parse_sentence(text)
            space = build_mental_space(s, graph, depth=1)
            tokens = {lex.normalize(t) for t in text.lower().replace(".", "").split()}
            assert space.anchored <= tokens
