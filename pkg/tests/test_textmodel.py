import math

import pytest
from hypothesis import given, strategies as st

from opinionrank.corpus import AnnotatedDocument, GoldLabel, Sentence, Token
from opinionrank.textmodel import cosine_sim, sentence_distance, vectorize


def make_doc(token_lists):
    sentences = tuple(
        Sentence(
            text=" ".join(toks),
            tokens=tuple(Token(t, t.lower(), i) for i, t in enumerate(toks)),
            arcs=(),
            gold_label=GoldLabel.UNLABELED,
            position=pos,
        )
        for pos, toks in enumerate(token_lists)
    )
    return AnnotatedDocument(id="t", sentences=sentences)


sparse_vectors = st.dictionaries(
    st.text(alphabet="abcdefg", min_size=1, max_size=3),
    st.floats(min_value=1e-6, max_value=1e3, allow_nan=False),
    max_size=8,
)


class TestVectorize:
    def test_single_sentence_weights_are_one(self):
        # tf 1, idf = ln(2/2) + 1 = 1 for every term of a 1-sentence article
        space = vectorize(make_doc([["a", "b"]]))
        assert space.vectors[0] == {"a": 1.0, "b": 1.0}

    def test_ubiquitous_term_gets_idf_one(self):
        space = vectorize(make_doc([["a", "x"], ["a", "y"], ["a", "z"]]))
        for vec in space.vectors:
            assert vec["a"] == pytest.approx(1.0, abs=1e-12)  # tf 1 * idf 1

    def test_empty_sentence_yields_empty_vector(self):
        space = vectorize(make_doc([["a"], []]))
        assert space.vectors[1] == {}

    def test_punctuation_tokens_dropped(self):
        space = vectorize(make_doc([["Hello", ",", "--", "world", "."]]))
        assert set(space.vectors[0]) == {"hello", "world"}

    def test_term_frequency_counts(self):
        space = vectorize(make_doc([["a", "a", "b"], ["c"]]))
        idf_a = math.log((1 + 2) / (1 + 1)) + 1
        assert space.vectors[0]["a"] == pytest.approx(2 * idf_a, rel=1e-12)

    def test_one_vector_per_sentence(self, fixture_corpus):
        for doc in fixture_corpus.documents:
            assert len(vectorize(doc).vectors) == doc.n


class TestCosine:
    def test_identical_vectors(self):
        v = {"x": 2.0, "y": 3.0}
        assert cosine_sim(v, v) == pytest.approx(1.0, abs=1e-12)

    def test_disjoint_support(self):
        assert cosine_sim({"x": 1.0}, {"y": 1.0}) == 0.0

    def test_hand_value(self):
        # dot = 1, norms 1 and sqrt(2)
        assert cosine_sim({"x": 1.0}, {"x": 1.0, "y": 1.0}) == pytest.approx(
            1 / math.sqrt(2), abs=1e-12
        )

    def test_empty_vector_gives_zero(self):
        assert cosine_sim({}, {"x": 1.0}) == 0.0
        assert cosine_sim({}, {}) == 0.0

    @given(sparse_vectors, sparse_vectors)
    def test_symmetry_exact(self, a, b):
        assert cosine_sim(a, b) == cosine_sim(b, a)

    @given(sparse_vectors, sparse_vectors)
    def test_range(self, a, b):
        assert 0.0 <= cosine_sim(a, b) <= 1.0

    @given(sparse_vectors, st.floats(min_value=1e-3, max_value=1e3))
    def test_scale_invariance(self, a, c):
        b = {"x": 1.0, "y": 2.0}
        scaled = {t: w * c for t, w in a.items()}
        assert cosine_sim(scaled, b) == pytest.approx(cosine_sim(a, b), abs=1e-12)


class TestSentenceDistance:
    @pytest.mark.parametrize("i,j,expected", [(2, 5, 3), (5, 2, 3), (0, 1, 1)])
    def test_values(self, i, j, expected):
        assert sentence_distance(i, j) == expected

    def test_self_distance_rejected(self):
        with pytest.raises(ValueError):
            sentence_distance(4, 4)
