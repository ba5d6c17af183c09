"""Entity extraction and content risk scoring."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from privrisk.content_risk import (
    DEFAULT_SENSITIVITY,
    GAZETTEER_TYPES,
    RuleExtractor,
    RuleExtractorConfig,
    cbprs,
    comment_risks,
    load_gazetteer,
    post_risk,
    post_sensitivity,
    post_total_risk,
    score_post,
)
from privrisk.model import (
    DEFAULT_ENTITY_TYPES,
    Comment,
    Post,
    PrivacySetting,
    SensitiveEntity,
    SensitivityTable,
)


@pytest.fixture(scope="module")
def extractor() -> RuleExtractor:
    return RuleExtractor()


@pytest.fixture(scope="module")
def table() -> SensitivityTable:
    return SensitivityTable(weights=DEFAULT_SENSITIVITY)


def make_post(text, *, visibility=PrivacySetting.PUBLIC, comments=(), post_id="p", author=0):
    return Post(
        id=post_id,
        author=author,
        text=text,
        timestamp=0,
        visibility_setting=visibility,
        comments=tuple(comments),
    )


class TestExtraction:
    def test_single_email(self, extractor):
        text = "Contact me at jane@example.org"
        entities = extractor.extract(text)
        assert len(entities) == 1
        e = entities[0]
        assert e.entity_type == "EMAIL"
        assert e.surface == "jane@example.org"
        assert text.encode()[e.start:e.end].decode() == "jane@example.org"

    def test_empty_text(self, extractor):
        assert extractor.extract("") == []

    def test_plain_text_no_entities(self, extractor):
        assert extractor.extract("nothing to see here") == []

    def test_person_place_date(self, extractor):
        entities = extractor.extract("I met Barack Obama in Chicago on May 5, 2020")
        assert [e.entity_type for e in entities] == ["PERSON", "GPE", "DATE"]
        assert [e.surface for e in entities] == ["Barack Obama", "Chicago", "May 5, 2020"]

    def test_phone_number(self, extractor):
        entities = extractor.extract("call 555-123-4567 tonight")
        assert [e.entity_type for e in entities] == ["PHONE"]

    def test_sorted_by_start_and_nonoverlapping(self, extractor):
        text = "Priya flew to Tokyo on 2020-05-05, budget $1,200, back by 9:30 PM"
        entities = extractor.extract(text)
        starts = [e.start for e in entities]
        assert starts == sorted(starts)
        for a, b in zip(entities, entities[1:]):
            assert a.end <= b.start

    def test_longest_match_wins_across_types(self):
        config = RuleExtractorConfig(
            extra_terms={"ORG": ("Big Bank",), "GPE": ("Big Bank City",)}
        )
        entities = RuleExtractor(config).extract("we moved to Big Bank City last fall")
        assert [e.entity_type for e in entities] == ["GPE"]
        assert entities[0].surface == "Big Bank City"

    def test_case_insensitive_gazetteer(self, extractor):
        entities = extractor.extract("weekend in CHICAGO")
        assert [e.entity_type for e in entities] == ["GPE"]
        assert entities[0].surface == "CHICAGO"

    def test_word_boundary_guard(self, extractor):
        # "Chicagoan" must not match the GPE term "Chicago"
        assert extractor.extract("a Chicagoan invited us") == []

    def test_byte_offsets_for_non_ascii(self, extractor):
        text = "café at Union Station — try it"
        entities = extractor.extract(text)
        assert len(entities) == 1
        e = entities[0]
        assert e.entity_type == "FAC"
        raw = text.encode("utf-8")
        assert raw[e.start:e.end].decode("utf-8") == "Union Station"
        assert e.start == len("café at ".encode("utf-8"))

    def test_deterministic(self, extractor):
        text = "Sofia paid $40 for two tickets to Coachella on 2021-04-10"
        assert extractor.extract(text) == extractor.extract(text)

    def test_enabled_types_restriction(self):
        config = RuleExtractorConfig(enabled_types=("EMAIL",))
        entities = RuleExtractor(config).extract(
            "Barack Obama mailed jane@example.org from Chicago"
        )
        assert [e.entity_type for e in entities] == ["EMAIL"]

    def test_iso_and_written_dates(self, extractor):
        for text in ("born on 1991-04-03", "due May 5, 2020", "since 12/31/1999"):
            types = [e.entity_type for e in extractor.extract(text)]
            assert types == ["DATE"], text

    def test_numeric_families(self, extractor):
        cases = {
            "about 25% done": "PERCENT",
            "paid $1,200 upfront": "MONEY",
            "ran 5 km today": "QUANTITY",
            "finished 3rd overall": "ORDINAL",
        }
        for text, expected in cases.items():
            types = [e.entity_type for e in extractor.extract(text)]
            assert expected in types, (text, types)

    @given(st.text(alphabet="abz .,!?\n", max_size=80))
    @settings(max_examples=120)
    def test_never_crashes_and_spans_valid(self, text):
        entities = RuleExtractor().extract(text)
        raw = text.encode("utf-8")
        for e in entities:
            assert 0 <= e.start < e.end <= len(raw)
            assert raw[e.start:e.end].decode("utf-8") == e.surface


class TestGazetteers:
    def test_all_shipped_lists_load(self):
        for entity_type in GAZETTEER_TYPES:
            terms = load_gazetteer(entity_type)
            assert terms, entity_type
            assert all(t == t.strip() for t in terms)

    def test_gazetteer_types_within_taxonomy(self):
        assert set(GAZETTEER_TYPES) <= set(DEFAULT_ENTITY_TYPES)

    def test_external_directory(self, tmp_path):
        (tmp_path / "person.txt").write_text("Zaphod Beeblebrox\n")
        assert load_gazetteer("PERSON", tmp_path) == ("Zaphod Beeblebrox",)

    def test_default_sensitivity_covers_taxonomy(self):
        table = SensitivityTable(weights=DEFAULT_SENSITIVITY)
        table.check_covers(DEFAULT_ENTITY_TYPES)
        for weight in DEFAULT_SENSITIVITY.values():
            assert 0.0 <= weight <= 1.0


class TestScoringArithmetic:
    def test_email_plus_person(self, table):
        entities = [
            SensitiveEntity(entity_type="EMAIL", start=0, end=5, surface="a@b.c"),
            SensitiveEntity(entity_type="PERSON", start=6, end=10, surface="Jane"),
        ]
        assert post_sensitivity(entities, table) == pytest.approx(1.8, abs=1e-12)

    def test_duplicate_entities_both_count(self, table):
        entities = [
            SensitiveEntity(entity_type="EMAIL", start=0, end=5, surface="a@b.c"),
            SensitiveEntity(entity_type="EMAIL", start=6, end=11, surface="c@d.e"),
        ]
        assert post_sensitivity(entities, table) == pytest.approx(2.0, abs=1e-12)

    def test_post_risk_scaling(self):
        assert post_risk(1.8, 1.0) == pytest.approx(1.8, abs=1e-12)
        assert post_risk(1.8, 0.1) == pytest.approx(0.18, abs=1e-12)

    def test_post_risk_rejects_negatives(self):
        with pytest.raises(ValueError):
            post_risk(-1.0, 0.5)

    def test_unknown_entity_type_raises_keyerror(self, extractor):
        narrow = SensitivityTable(weights={"PERSON": 0.8})
        post = make_post("mail jane@example.org")
        with pytest.raises(KeyError, match="EMAIL"):
            score_post(post, narrow, extractor, 1.0)


class TestCommentsAndTotals:
    def test_comments_inherit_post_visibility(self, table, extractor):
        post = make_post(
            "hello",
            comments=[
                Comment(id="c1", author=1, text="mail jane@example.org", timestamp=1),
            ],
        )
        per_comment, total = comment_risks(post, table, extractor, 0.1)
        assert per_comment == [("c1", pytest.approx(0.1, abs=1e-12))]
        assert total == pytest.approx(0.1, abs=1e-12)

    def test_comment_total_sums(self, table, extractor):
        # comment risks 1.0 and 0.5 under a public post
        post = make_post(
            "hello",
            comments=[
                Comment(id="c1", author=1, text="mail jane@example.org", timestamp=1),
                Comment(id="c2", author=2, text="see you at Starbucks", timestamp=2),
            ],
        )
        scored = score_post(post, table, extractor, 1.0)
        assert scored.comment_scores[0].risk == pytest.approx(1.0, abs=1e-12)
        assert scored.comment_scores[1].risk == pytest.approx(0.5, abs=1e-12)
        assert scored.comment_total == pytest.approx(1.5, abs=1e-12)

    def test_total_combines_post_and_comments(self, table, extractor):
        post = make_post(
            "reach jane@example.org or ask Priya",  # 1.0 + 0.8
            comments=[
                Comment(id="c1", author=1, text="call 555-123-4567", timestamp=1),  # 1.0
                Comment(id="c2", author=2, text="met in Tokyo", timestamp=2),  # 0.7
            ],
        )
        scored = score_post(post, table, extractor, 1.0)
        assert scored.sensitivity == pytest.approx(1.8, abs=1e-12)
        assert scored.post_risk == pytest.approx(1.8, abs=1e-12)
        assert scored.comment_total == pytest.approx(1.7, abs=1e-12)
        assert scored.total == pytest.approx(3.5, abs=1e-12)
        assert post_total_risk(post, table, extractor, 1.0) == pytest.approx(3.5, abs=1e-12)

    def test_total_sensitivity_includes_comments(self, table, extractor):
        post = make_post(
            "reach jane@example.org",
            comments=[Comment(id="c1", author=1, text="met in Tokyo", timestamp=1)],
        )
        scored = score_post(post, table, extractor, 0.1)
        assert scored.total_sensitivity == pytest.approx(1.7, abs=1e-12)


class TestCbprs:
    def test_sums_over_authored_posts(self, table, extractor):
        posts = [
            # body 1.0 + 0.8, comments 1.0 + 0.5; public: R_Total = 1.8 + 1.5
            make_post(
                "reach jane@example.org or ask Priya",
                comments=[
                    Comment(id="c1", author=1, text="call 555-123-4567", timestamp=1),
                    Comment(id="c2", author=2, text="see you at Starbucks", timestamp=2),
                ],
                post_id="p1",
                author=0,
            ),
            # body 1.0 + 0.8 again, but locked down: R_Total = 1.8 * 0.1
            make_post(
                "text 555-987-6543 or ask Priya",
                visibility=PrivacySetting.ONLY_ME,
                post_id="p2",
                author=0,
            ),
            make_post("ask Priya", post_id="p3", author=1),
        ]

        def vis(post):
            return 1.0 if post.visibility_setting is PrivacySetting.PUBLIC else 0.1

        total, breakdown = cbprs(0, posts, table, extractor, vis)
        assert breakdown["p1"] == pytest.approx(3.3, abs=1e-12)
        assert breakdown["p2"] == pytest.approx(0.18, abs=1e-12)
        assert "p3" not in breakdown
        assert total == pytest.approx(3.48, abs=1e-12)

    def test_no_posts_scores_zero(self, table, extractor):
        total, breakdown = cbprs(5, [], table, extractor, lambda p: 1.0)
        assert total == 0.0
        assert breakdown == {}


# ---------------------------------------------------------------------------
# arithmetic properties

sens_values = st.floats(0.0, 10.0, allow_nan=False)
vis_values = st.floats(0.0, 1.0, allow_nan=False)


class TestProperties:
    @given(sens_values, sens_values, vis_values)
    @settings(max_examples=300)
    def test_added_entity_never_lowers_risk(self, base, extra, vis):
        assert post_risk(base + extra, vis) >= post_risk(base, vis) - 1e-12

    @given(sens_values, vis_values, st.floats(0.0, 1.0))
    @settings(max_examples=300)
    def test_risk_linear_in_visibility(self, sens, vis, scale):
        direct = post_risk(sens, vis * scale)
        scaled = post_risk(sens, vis) * scale
        assert direct == pytest.approx(scaled, rel=1e-9, abs=1e-12)

    @given(st.lists(st.sampled_from(sorted(DEFAULT_SENSITIVITY)), max_size=12))
    @settings(max_examples=200)
    def test_sensitivity_additive_over_entities(self, types):
        table = SensitivityTable(weights=DEFAULT_SENSITIVITY)
        entities = [
            SensitiveEntity(entity_type=t, start=i * 2, end=i * 2 + 1, surface="x")
            for i, t in enumerate(types)
        ]
        total = post_sensitivity(entities, table)
        assert total == pytest.approx(sum(DEFAULT_SENSITIVITY[t] for t in types), abs=1e-9)

    def test_extraction_append_independent_prefix(self, extractor, table):
        # appending a sentence never changes entities found before the join
        rng = random.Random(9)
        base = "Priya emailed jane@example.org"
        for _ in range(20):
            suffix = rng.choice(
                [" and moved to Berlin", " on May 5, 2020", " paying $30", " quietly"]
            )
            combined = base + "." + suffix
            prefix_len = len(base.encode())
            before = post_sensitivity(extractor.extract(base), table)
            kept = [e for e in extractor.extract(combined) if e.end <= prefix_len]
            assert post_sensitivity(kept, table) == pytest.approx(before, abs=1e-12)
