import json
import random

import numpy as np
import pytest

from finring import Subset, make_cyclic_ring, run_check, run_suite
from finring.harness import (
    CHECKS,
    CHECKS_BY_ID,
    DEFAULT_CAPS,
    PairContext,
    SuiteReport,
    corpus_pairs,
    default_corpus,
    discover_extensions,
    emit_report,
    load_corpus_file,
    select_checks,
    triangular_subring,
)
from finring.ideals import not_prime_witness
from finring.substructures import Side, idealizer, is_ideal, maximal_ideals


def result_map(report):
    return {(r.check_id, r.pair_label): (r.verdict, r.witness) for r in report.results}


def test_discovery_counts(z4, f2xf2, m2f2):
    assert discover_extensions(z4) == []
    assert len(discover_extensions(f2xf2)) == 1
    pairs = discover_extensions(m2f2)
    assert len(pairs) == 4
    subs = {p.subring for p in pairs}
    assert triangular_subring(m2f2, "lower") in subs
    assert triangular_subring(m2f2, "upper") in subs


def test_discovery_includes_idealizer_pairs(m2f2):
    pairs = {p.subring.key() for p in discover_extensions(m2f2)}
    for side in (Side.LEFT, Side.RIGHT):
        for A in maximal_ideals(m2f2, side):
            if is_ideal(m2f2, A, Side.TWO_SIDED):
                continue
            assert idealizer(m2f2, A, side).key() in pairs


def test_subring_containing_nontwosided_maximal_ideal_is_its_idealizer(corpus):
    # pairs whose subring swallows a maximal one-sided ideal of T that is not
    # two-sided must be exactly the idealizer of that ideal
    for pair in corpus:
        T = pair.ring
        if T.order > DEFAULT_CAPS.ideal_lattice:
            continue
        for side in (Side.LEFT, Side.RIGHT):
            for A in maximal_ideals(T, side, cap=DEFAULT_CAPS.ideal_lattice):
                if is_ideal(T, A, Side.TWO_SIDED):
                    continue
                if A <= pair.subring:
                    assert idealizer(T, A, side) == pair.subring, pair.label


def test_c02_and_c05_on_example_pair(lower_pair):
    ctx = PairContext(lower_pair)
    r2 = run_check(CHECKS_BY_ID["C02"], ctx)
    assert r2.verdict == "pass"
    r5 = run_check(CHECKS_BY_ID["C05"], ctx)
    assert r5.verdict == "pass"


def test_vacuous_semantics(lower_pair):
    ctx = PairContext(lower_pair)
    r = run_check(CHECKS_BY_ID["C29"], ctx)
    assert r.verdict == "vacuous"
    assert "closed" in r.note


def test_fail_witness_replays(m2f2, lower_pair):
    """Drive a predicate the registry consumes and replay its witness."""
    zero = Subset.from_indices(m2f2, [m2f2.zero])
    w = not_prime_witness(m2f2, zero, scope=lower_pair.subring)
    assert w is not None
    a, b = w
    ridx = lower_pair.subring.indices()
    assert all(m2f2.mul[m2f2.mul[a, s], b] == m2f2.zero for s in ridx)
    assert a != m2f2.zero and b != m2f2.zero


def test_suite_verdicts_order_independent(corpus):
    rng = random.Random(11)
    baseline = result_map(run_suite(corpus))
    pairs = list(corpus)
    checks = list(CHECKS)
    rng.shuffle(pairs)
    rng.shuffle(checks)
    shuffled = result_map(run_suite(pairs, checks))
    assert shuffled == baseline


def test_default_suite_green(suite_report):
    counts = suite_report.counts
    assert counts["fail"] == 0
    assert suite_report.ok


def test_every_check_has_nonvacuous_pass(suite_report):
    passed = {r.check_id for r in suite_report.results if r.verdict == "pass"}
    for check in CHECKS:
        if check.check_id in ("C29", "C32"):
            continue
        assert check.check_id in passed, f"{check.check_id} never passed non-vacuously"


def test_machine_report_schema(suite_report):
    text = emit_report(suite_report, "machine")
    lines = [l for l in text.splitlines() if l]
    assert len(lines) == len(suite_report.results)
    for line in lines[:50]:
        record = json.loads(line)
        assert list(record.keys()) == ["check_id", "pair_label", "verdict", "witness", "micros"]
        assert record["verdict"] in ("pass", "fail", "vacuous")
        assert isinstance(record["witness"], list)
        assert isinstance(record["micros"], int)


def test_human_report_summary(suite_report):
    text = emit_report(suite_report, "human")
    assert "pass," in text and "fail," in text and "vacuous" in text


def test_empty_corpus():
    report = run_suite([])
    assert report.ok
    assert emit_report(report, "machine") == ""


def test_select_checks():
    picked = select_checks("C01, c05,C19")
    assert [c.check_id for c in picked] == ["C01", "C05", "C19"]
    with pytest.raises(ValueError):
        select_checks("C99")


def test_commutative_pairs_pass_cp_checks(suite_report):
    commutative = [r for r in suite_report.results
                   if r.pair_label.startswith(("Prod", "F4", "F8", "Z(2)"))
                   and r.check_id in ("C13", "C27")]
    assert commutative
    assert all(r.verdict in ("pass", "vacuous") for r in commutative)


def test_corpus_file_roundtrip(tmp_path):
    doc = {
        "entries": [
            {"ring": "Prod(Z(2),Z(2))", "mode": "discover"},
            {"ring": "Mat(Z(2),2)", "pairs": [{"name": "upper", "generators": [8, 4]}]},
            {"ring": "Z(0)", "mode": "discover"},
        ]
    }
    path = tmp_path / "corpus.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    entries, errors = load_corpus_file(str(path))
    assert len(entries) == 2
    assert len(errors) == 1 and "entry 2" in errors[0]
    pairs = corpus_pairs(entries)
    assert len(pairs) == 2
    report = run_suite(pairs)
    assert report.ok
    rendered = emit_report(report, "human")
    assert "Mat(Z(2),2)/upper" in rendered


def test_declared_nonmaximal_pair_rejected(tmp_path):
    doc = {"entries": [{"ring": "Mat(Z(2),2)", "pairs": [{"name": "prime", "generators": []}]}]}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    entries, errors = load_corpus_file(str(path))
    assert not errors
    with pytest.raises(ValueError):
        corpus_pairs(entries)
