"""
명령행 테스트 (click CliRunner)
"""
import json

import pytest
from click.testing import CliRunner

from conftest import fixture_path
from core.properties import settings
from main import cli
from services.document_service import DocumentService
from services.kgraph_service import KGraphService


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner(mix_stderr=False)


def run(runner: CliRunner, *args: str):
    return runner.invoke(cli, ["--log-level", "warning", *args])


def run_json(runner: CliRunner, *args: str):
    result = runner.invoke(cli, ["--json", "--log-level", "warning", *args])
    return result, json.loads(result.stdout)


def graph_from_text(text: str):
    return KGraphService.validate(*DocumentService.parse(text))


class TestGraphCommands:

    def test_validate_g1(self, runner):
        result = run(runner, "validate", str(fixture_path("g1")))
        assert result.exit_code == 0
        assert "valid 2-graph: 12 vertices, 9 colour-1 edges, 8 colour-2 edges, 6 squares" in result.stdout
        assert "locally convex" in result.stdout

    def test_validate_g2_is_not_locally_convex(self, runner):
        result = run(runner, "validate", str(fixture_path("g2")))
        assert result.exit_code == 1
        assert "not locally convex" in result.stdout

    def test_validate_twisted_cube(self, runner):
        result, payload = run_json(runner, "validate", str(fixture_path("cube-twisted")))
        assert result.exit_code == 2
        assert payload["error"] == "CubeViolation"
        assert len(payload["data"]["triples"]) == 3

    def test_enumerate_squares(self, runner, tmp_path):
        result = run(runner, "squares", str(fixture_path("g3-extended")), "--enumerate", "--write-dir", str(tmp_path))
        assert result.exit_code == 0
        assert "2 square sets" in result.stdout
        written = sorted(tmp_path.glob("*.kgraph"))
        assert [path.name for path in written] == ["g3-extended-1.kgraph", "g3-extended-2.kgraph"]
        assert all(DocumentService.load(path).validated for path in written)

    def test_omega_matches_fixture(self, runner, g1):
        result = run(runner, "omega", "2", "3,2")
        assert result.exit_code == 0
        assert graph_from_text(result.stdout) == g1

    def test_compose_spellings(self, runner):
        result, payload = run_json(runner, "compose", str(fixture_path("g3")), "--edges", "g,e,g,h", "--spellings")
        assert result.exit_code == 0
        assert payload["data"]["spellings"] == [list("fgeg"), list("gefg"), list("gegh"), list("gheg")]

    def test_compose_not_composable(self, runner):
        result = run(runner, "compose", str(fixture_path("g3")), "--edges", "e,e")
        assert result.exit_code == 2

    def test_export_dot(self, runner):
        result = run(runner, "export-dot", str(fixture_path("g2")))
        assert result.exit_code == 0
        assert result.stdout.startswith('digraph "g2" {')


class TestPathCommands:

    def test_le_paths(self, runner):
        result = run(runner, "le-paths", str(fixture_path("g2")), "--vertex", "v", "--cap", "1,1")
        assert result.exit_code == 0
        assert result.stdout.splitlines()[0] == "2 paths in Λ^≤(1,1)(v)"

    def test_le_paths_degree_alias(self, runner):
        by_cap = run(runner, "le-paths", str(fixture_path("g2")), "--vertex", "v", "--cap", "1,1")
        by_degree = run(runner, "le-paths", str(fixture_path("g2")), "--vertex", "v", "--degree", "1,1")
        assert by_degree.exit_code == 0
        assert by_degree.stdout == by_cap.stdout

    def test_bad_degree_is_an_input_error(self, runner):
        result = run(runner, "paths", str(fixture_path("g2")), "--vertex", "v", "--degree", "1,x")
        assert result.exit_code == 2

    def test_unknown_vertex(self, runner):
        result = run(runner, "paths", str(fixture_path("g2")), "--vertex", "nowhere", "--degree", "1,1")
        assert result.exit_code == 2

    def test_condition_b_single_loop(self, runner):
        result = run(runner, "condition-b", str(fixture_path("g5")), "--depth", "4")
        assert result.exit_code == 1
        assert "refuted" in result.stdout.lower()

    def test_condition_b_grid(self, runner):
        result, payload = run_json(runner, "condition-b", str(fixture_path("g4")), "--depth", "1,1")
        assert result.exit_code == 0
        assert {verdict["status"] for verdict in payload["data"]["verdicts"]} == {"PROVEN"}


class TestAlgebraCommands:

    def test_ck_verify_g1(self, runner):
        result = run(runner, "ck-verify", str(fixture_path("g1")))
        assert result.exit_code == 0
        assert "relations (1)-(4) verified" in result.stdout
        assert "span dimension 144" in result.stdout

    def test_ck_verify_cyclic_exceeds_guard(self, runner):
        result = run(runner, "ck-verify", str(fixture_path("g5")))
        assert result.exit_code == 3

    def test_forced_zeros(self, runner):
        result = run(runner, "forced-zeros", str(fixture_path("g2")))
        assert result.exit_code == 1
        assert "forced zeros: v, f, e" in result.stdout

    def test_core(self, runner):
        result = run(runner, "core", str(fixture_path("g4")), "--q", "1,1")
        assert result.exit_code == 0
        assert result.stdout.splitlines()[0] == "F_(1,1): 4 blocks, total dimension 4"


class TestIdealCommands:

    def test_ideals_g4(self, runner):
        result = run(runner, "ideals", str(fixture_path("g4")), "--list", "--condition-b", "1,1")
        assert result.exit_code == 0
        assert result.stdout.splitlines()[0] == "2 saturated hereditary sets"

    def test_quotient_writes_document(self, runner, tmp_path):
        target = tmp_path / "empty.kgraph"
        result = run(runner, "quotient", str(fixture_path("g4")), "--set", "v0_0,v0_1,v1_0,v1_1", "--output", str(target))
        assert result.exit_code == 0
        assert DocumentService.load(target).vertices == ()

    def test_quotient_not_saturated(self, runner):
        result, payload = run_json(runner, "quotient", str(fixture_path("g4")), "--set", "v1_1")
        assert result.exit_code == 2
        assert payload["ok"] is False
        assert payload["error"] == "NotSaturated"


class TestJsonEnvelope:

    def test_schema_field(self, runner):
        result, payload = run_json(runner, "validate", str(fixture_path("g1")))
        assert result.exit_code == 0
        assert payload["schema"] == settings.JSON_SCHEMA
        assert payload["command"] == "validate"
        assert payload["data"]["locally_convex"] is True


FIXTURES = ["g1", "g2", "g3", "g3-extended", "g4", "g5", "cube-twisted"]


def command_lines(name: str):
    """fixture 하나에 대해 모든 명령의 인자 목록"""
    file = str(fixture_path(name))
    skeleton, _ = DocumentService.parse(fixture_path(name).read_text(encoding="utf-8"))
    vertex = skeleton.vertices[0]
    ones = ",".join("1" for _ in range(skeleton.k))
    everything = ",".join(skeleton.vertices)
    return [
        ["validate", file],
        ["squares", file],
        ["compose", file, "--edges", skeleton.edges[0].id],
        ["paths", file, "--vertex", vertex, "--degree", ones],
        ["le-paths", file, "--vertex", vertex, "--cap", ones],
        ["boundary", file, "--vertex", vertex, "--cap", ones],
        ["condition-b", file, "--depth", ones],
        ["ck-verify", file],
        ["forced-zeros", file],
        ["core", file, "--q", ones],
        ["ideals", file, "--list"],
        ["quotient", file, "--set", everything],
        ["restrict", file, "--set", everything],
        ["export-dot", file],
    ]


class TestDeterminism:

    @pytest.mark.parametrize("name", FIXTURES)
    def test_repeated_runs_are_identical(self, runner, name):
        for args in command_lines(name):
            first = run(runner, *args)
            second = run(runner, *args)
            assert first.exit_code == second.exit_code, args
            assert first.stdout == second.stdout, args

    def test_omega_is_identical(self, runner):
        first = run(runner, "omega", "3", "2,1,1")
        second = run(runner, "omega", "3", "2,1,1")
        assert first.exit_code == second.exit_code == 0
        assert first.stdout == second.stdout
