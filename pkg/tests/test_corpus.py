"""Corpus loading, validation, and text lookup."""

import json

import pytest

from hexatone.casting import CastingRecord, CoinToss, Face
from hexatone.corpus import corpus_from_data, load_corpus, lookup_texts
from hexatone.errors import CorpusMissingEntry, CorpusSchemaError

from conftest import cast_record

H, T = Face.HEADS, Face.TAILS


def record_with_sums(sums):
    coins = {9: (H, H, H), 7: (H, T, T), 8: (H, H, T), 6: (T, T, T)}
    record = CastingRecord(seed=0)
    for total in sums:
        record = record.with_toss(CoinToss(coins=coins[total]))
    return record


def test_bundled_corpus_is_complete(corpus):
    assert len(corpus) == 64
    for number in range(1, 65):
        entry = corpus.entry(number)
        assert entry.name_pinyin and entry.name_translated
        assert entry.gua_ci.strip()
        assert len(entry.yao_ci) == 6
        assert all(text.strip() for text in entry.yao_ci)


def test_load_corpus_from_file(tmp_path, corpus):
    entries = [
        {
            "king_wen": n,
            "name_pinyin": corpus.entry(n).name_pinyin,
            "name_translated": corpus.entry(n).name_translated,
            "gua_ci": corpus.entry(n).gua_ci,
            "yao_ci": list(corpus.entry(n).yao_ci),
        }
        for n in range(1, 65)
    ]
    path = tmp_path / "corpus.json"
    path.write_text(json.dumps(entries), encoding="utf-8")
    loaded = load_corpus(path)
    assert loaded.entry(31).gua_ci == corpus.entry(31).gua_ci


@pytest.mark.parametrize(
    "mutate, message",
    [
        (lambda e: e.pop(), "63 entries"),
        (lambda e: e[0].update(king_wen=2), "duplicate"),
        (lambda e: e[5].update(gua_ci=""), "non-empty"),
        (lambda e: e[9]["yao_ci"].pop(), "6 non-empty"),
        (lambda e: e[3].pop("name_pinyin"), "missing field"),
    ],
)
def test_schema_violations_rejected(corpus, mutate, message):
    entries = [
        {
            "king_wen": n,
            "name_pinyin": corpus.entry(n).name_pinyin,
            "name_translated": corpus.entry(n).name_translated,
            "gua_ci": corpus.entry(n).gua_ci,
            "yao_ci": list(corpus.entry(n).yao_ci),
        }
        for n in range(1, 65)
    ]
    mutate(entries)
    with pytest.raises(CorpusSchemaError):
        corpus_from_data(entries)


def test_missing_file_raises_oserror(tmp_path):
    with pytest.raises(OSError):
        load_corpus(tmp_path / "absent.json")


def test_lookup_outside_table_rejected(corpus):
    with pytest.raises(CorpusMissingEntry):
        corpus.entry(65)
    with pytest.raises(CorpusMissingEntry):
        corpus.entry(0)


def test_invalid_json_raises_schema_error(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(CorpusSchemaError):
        load_corpus(path)


class TestLookup:
    def test_no_changing_lines_gives_empty_yao_list(self, corpus):
        record = record_with_sums([7, 8, 7, 8, 7, 8])
        gua_ci_ben, changing, gua_ci_zhi = lookup_texts(corpus, record)
        assert changing == []
        assert gua_ci_ben and gua_ci_zhi
        assert gua_ci_ben == gua_ci_zhi  # unchanged casting keeps one hexagram

    def test_changing_lines_in_ascending_order(self, corpus):
        record = record_with_sums([7, 9, 7, 7, 6, 7])  # lines 2 and 5 change
        _, changing, _ = lookup_texts(corpus, record)
        assert [i for i, _ in changing] == [2, 5]
        entry = corpus.entry(record.ben_gua.king_wen)
        assert changing[0][1] == entry.yao_ci[1]
        assert changing[1][1] == entry.yao_ci[4]

    def test_all_yang_record_reads_entry_one(self, corpus):
        record = record_with_sums([7] * 6)
        gua_ci_ben, _, _ = lookup_texts(corpus, record)
        assert gua_ci_ben == corpus.entry(1).gua_ci

    def test_random_records_look_up_cleanly(self, corpus):
        for seed in range(25):
            record = cast_record(seed)
            gua_ci_ben, changing, gua_ci_zhi = lookup_texts(corpus, record)
            assert len(changing) == len(record.dong_yao)
