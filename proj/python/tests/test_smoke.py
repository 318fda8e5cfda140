import math

import pytest

import tweetiment as tw


def test_normalize_examples():
    assert tw.normalize_tweet("@bolly47 oh no :( r.i.p. your bella") == [
        "USER_MENTION", "oh", "no", "EMO_NEG", "r.i.p", "your", "bella"]
    assert tw.normalize_tweet("I am sooooo happpppy") == ["i", "am", "soo", "happy"]
    assert tw.normalize_word("t-shirt") == "tshirt"
    assert tw.normalize_word("!!!") is None
    assert tw.is_valid_word("r.i.p")


def test_custom_emoticons():
    table = tw.EmoticonTable(["^_^"], ["-_-"])
    assert tw.normalize_tweet("ok ^_^ -_-", table) == ["ok", "EMO_POS", "EMO_NEG"]


def test_vocabulary_and_vectorize():
    corpus = [["good", "day"], ["good", "good"], ["bad", "day"]]
    vocab = tw.build_vocabulary(corpus, 2, 1)
    assert vocab.terms() == [("U", "good"), ("U", "day"), ("B", "bad day")]
    fv = tw.vectorize(["bad", "day", "good", "good"], vocab, tw.FeatureMode.frequency)
    assert fv.entries == [(0, 2), (1, 1), (2, 1)]


def test_naive_bayes_worked_example():
    docs = [tw.FeatureVector(tw.FeatureMode.frequency, [(0, 2)]),
            tw.FeatureVector(tw.FeatureMode.frequency, [(1, 1)])]
    labels = [tw.Sentiment.positive, tw.Sentiment.negative]
    model = tw.nb_train(docs, labels, 2)
    assert math.exp(model.feature_log_likelihood[1][0]) == pytest.approx(0.75, abs=1e-15)
    assert math.exp(model.feature_log_likelihood[0][0]) == pytest.approx(1 / 3, abs=1e-15)
    label, _ = tw.nb_predict(model, tw.FeatureVector(tw.FeatureMode.frequency, [(0, 1)]))
    assert label == tw.Sentiment.positive


def test_maxent_fit_is_monotone():
    docs = [tw.FeatureVector(tw.FeatureMode.frequency, e)
            for e in ([(0, 1), (1, 1)], [(1, 1), (2, 1)], [(0, 1), (2, 1)], [(0, 1), (1, 1), (2, 1)])]
    labels = [tw.Sentiment.positive] * 3 + [tw.Sentiment.negative]
    cfg = tw.TrainerConfig(tw.TrainingAlgorithm.gis, 200, 1e-12)
    model, ll, _ = tw.maxent_fit(docs, labels, 3, cfg)
    assert all(b >= a - 1e-9 for a, b in zip(ll, ll[1:]))
    assert sum(tw.maxent_prob(model, docs[0])) == pytest.approx(1.0)


def test_pipeline_round_trip():
    raw = ["love it :)", "great day", "so happy", "hate it :(", "bad day", "so sad"]
    corpus = [tw.normalize_tweet(r) for r in raw]
    labels = [tw.Sentiment.positive] * 3 + [tw.Sentiment.negative] * 3
    for kind in ("nb", "maxent"):
        model = tw.train_model(corpus, labels, kind=kind)
        back = tw.deserialize_model(tw.serialize_model(model))
        assert back == model
        assert [tw.predict(back, t) for t in corpus] == labels
    report = tw.evaluate(labels, labels, "self")
    assert report.accuracy == 1.0


def test_stats_and_split():
    stats = tw.corpus_stats([["USER_MENTION", "hi"], ["URL"]])
    assert stats["user_mentions"]["total"] == 1
    assert stats["n_positive"] is None
    train, test = tw.split_dataset(list(range(10)), 0.8, 3)
    assert len(train) == 8 and sorted(train + test) == list(range(10))
    assert tw.split_dataset(list(range(10)), 0.8, 3) == (train, test)


def test_errors_are_value_errors():
    with pytest.raises(tw.TweetimentError, match="unsupported version"):
        tw.deserialize_model("tweetiment-model v999 naive_bayes\n")
    with pytest.raises(ValueError):
        tw.OpinionLexicon(["x"], ["x"])
