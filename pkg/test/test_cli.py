"""CLI: subcomandos, códigos de salida y reproducibilidad de certificados."""

from __future__ import annotations

import json

import pydotplus
import pytest

from pipedegen.application.dto.certificate_dto import Certificate, CheckResult, PartitionReport
from pipedegen.infrastructure.reporting.certificate_store import CertificateStore
from pipedegen.presentation.cli.main import EXIT_CONFIG, EXIT_FAILED, EXIT_OK, EXIT_PARTIAL, exit_code_for, main

PIPE_SET = "(1,1),(2,2),(1,2),(2,3),(1,4)"


def certificate_with(*checks: CheckResult) -> Certificate:
    part = PartitionReport(partition="0x0", label="O=∅", order_part=[], checks=list(checks))
    return Certificate(version="0", schema_version="1", command="verify", config={}, partitions=[part])


def test_exit_code_precedence():
    ok = CheckResult(name="a", passed=True)
    bad = CheckResult(name="b", passed=False)
    partial = CheckResult(name="c", passed=False, partial=True)
    assert exit_code_for(certificate_with(ok)) == EXIT_OK
    assert exit_code_for(certificate_with(ok, partial)) == EXIT_PARTIAL
    assert exit_code_for(certificate_with(partial, bad)) == EXIT_FAILED


def test_verify_all_partitions_is_reproducible(container, tmp_path):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    argv = ["verify", "--n", "3", "--signature", "1,2", "--all-partitions"]
    assert main([*argv, "--output", str(first)], container) == EXIT_OK
    assert main([*argv, "--output", str(second)], container) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()
    data = json.loads(first.read_text(encoding="utf-8"))
    assert len(data["partitions"]) == 8
    assert data["census"]["distinct_ideals"] == 3
    assert data["census"]["orbits"] == 1
    assert data["summary"]["passed"] is True


def test_degenerate_prints_certificate(container, capsys):
    code = main(["degenerate", "--n", "4", "--signature", "1,2,3", "--order-part", "(1,2),(1,4),(2,3)"], container)
    assert code == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["command"] == "degenerate"
    names = {c["name"] for c in data["partitions"][0]["checks"]}
    assert names == {"degeneration", "kernel"}


def test_malformed_signature_is_a_config_error(container, capsys):
    assert main(["verify", "--n", "3", "--signature", "1,x", "--order-part", "none"], container) == EXIT_CONFIG
    assert json.loads(capsys.readouterr().err.strip().splitlines()[-1])["error"] == "PARSE_ERROR"


def test_empty_weight_list_is_a_config_error(container):
    argv = ["verify", "--n", "3", "--signature", "1,2", "--order-part", "none", "--weights", ""]
    assert main(argv, container) == EXIT_CONFIG


def test_single_selector_needs_partition(container):
    assert main(["verify", "--n", "3", "--signature", "1,2"], container) == EXIT_CONFIG


def test_pipedream_ascii(container, capsys):
    assert main(["pipedream", "--n", "4", "--subset", PIPE_SET], container) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("w_M = ")
    assert "=> 4" in out


def test_pipedream_dot_parses(container, tmp_path):
    target = tmp_path / "pipes.dot"
    argv = ["render", "--n", "4", "--subset", PIPE_SET, "--format", "dot", "--output", str(target)]
    assert main(argv, container) == EXIT_OK
    graph = pydotplus.graph_from_dot_data(target.read_text(encoding="utf-8"))
    exits = [node for node in graph.get_nodes() if node.get_name().startswith("exit_")]
    assert len(exits) == 4


def test_ideals_counts(container, capsys):
    assert main(["ideals", "--n", "4", "--k", "2"], container) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["ideals"]["2"]["count"] == 6


def test_ideals_rejects_out_of_range_k(container):
    assert main(["ideals", "--n", "4", "--k", "4"], container) == EXIT_CONFIG


def test_mcop_points(container, capsys):
    assert main(["mcop", "--n", "3", "--order-part", "all", "--weight", "1,1", "--points"], container) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["count"] == data["weyl_dim"] == 8
    assert len(data["transformed_points"]) == 8


def test_mcop_rejects_weight_of_wrong_rank(container):
    assert main(["mcop", "--n", "4", "--order-part", "none", "--weight", "1,1"], container) == EXIT_CONFIG


def test_tableaux_and_rep_basis(container, capsys):
    argv = ["tableaux", "--n", "4", "--order-part", "(1,2),(1,4),(2,3)", "--weight", "0,1,1", "--limit", "2"]
    assert main(argv, container) == EXIT_OK
    assert "20 tablas" in capsys.readouterr().out
    assert main(["rep-basis", "--n", "3", "--order-part", "none", "--weight", "1,1"], container) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["basis"]["rank"] == 8


def test_semiinf(container, tmp_path):
    target = tmp_path / "semi.json"
    argv = ["semiinf", "--n", "4", "--k", "2", "--d-max", "1", "--pipe-trials", "3", "--output", str(target)]
    assert main(argv, container) == EXIT_OK
    data = json.loads(target.read_text(encoding="utf-8"))
    assert [c["name"] for c in data["partitions"][0]["checks"]] == ["semiinf", "semiinf_pipe_values"]
    assert data["config"]["expected_per_level"] == 6


def test_semiinf_bad_extra_is_a_config_error(container):
    assert main(["semiinf", "--n", "5", "--k", "3", "--order-extra", "(4,4)"], container) == EXIT_CONFIG


def test_unknown_suite_is_a_config_error(container):
    argv = ["verify", "--n", "3", "--signature", "1", "--order-part", "none", "--suites", "nope"]
    assert main(argv, container) == EXIT_CONFIG


def test_missing_subcommand_exits():
    with pytest.raises(SystemExit):
        main([])


# ─── Contenedor ───────────────────────────────────────────────────────

def test_container_override_and_reset(container):
    store = CertificateStore()
    container.override("certificate_store", store)
    assert container.certificate_store is store
    assert container.report_usecase is container.report_usecase
    container.reset()
    assert container.certificate_store is not store


def test_container_rejects_unknown_dependency(container):
    with pytest.raises(ValueError):
        container.override("plotter", object())
