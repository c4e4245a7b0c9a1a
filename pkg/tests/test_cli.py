import pytest

from app.cli import EXIT_INPUT_ERROR, EXIT_NEGATIVE, EXIT_OK, main
from app.domain.atom import Signature
from app.repositories.catalog_files import CatalogFilesRepository
from app.services.molecule_algebra import evaluate
from app.services.molecule_serializers import MoleculeSerializer
from app.services.worked_examples import (
    CUBE_ITEM_31,
    PAIRWISE_EXAMPLE,
    PAIRWISE_MIDDLE_LEVEL_1,
    TWO_FACTOR_MIDDLE,
    TWO_FACTOR_SOURCE,
    TWO_FACTOR_TARGET,
)

from conftest import CUBE, PAIR, sub


def run(container, capsys, *argv):
    code = main(list(argv), container=container)
    out, err = capsys.readouterr()
    return code, out, err


def test_check_molecule(container, capsys):
    code, out, _ = run(container, capsys, "check", "(1+,0-);(0+,1+)")
    assert code == EXIT_OK
    assert out == "molecule\n"


def test_check_reports_reason_and_witnesses(container, capsys):
    code, out, _ = run(container, capsys, "check", "--factors", "2", "(1+,0+);(0+,1+)")
    assert code == EXIT_NEGATIVE
    assert out.splitlines() == ["not-molecule: sign-link", "witness: (1+,0+)", "witness: (0+,1+)"]


def test_check_explicit_conditions(container, capsys):
    code, out, _ = run(container, capsys, "check", "--explicit", "(1-,1+,0-);(0-,1+,1+)")
    assert code == EXIT_NEGATIVE
    assert out.splitlines()[0] == "not-molecule: middle-gap"

    code, out, _ = run(container, capsys, "check", "(1-,1+,0-);(0-,1+,1+)")
    assert code == EXIT_NEGATIVE
    assert out.splitlines()[:3] == ["not-molecule: projection", "axis: 2", "level: 0"]


def test_check_capped(container, capsys):
    code, out, _ = run(container, capsys, "check", "--caps", "1,1,1", CUBE_ITEM_31)
    assert code == EXIT_OK
    assert out == "molecule\n"


@pytest.mark.parametrize("argv", [
    ["check", "(1+,0"],
    ["check", "(1*,0+)"],
    ["check", "{}"],
    ["check", "--factors", "2", "--twists", "0,2", "(1+,0-)"],
    ["source", "-p", "0", "(1+,0+);(0+,1+)"],
    ["compose", "-p", "5", TWO_FACTOR_SOURCE, TWO_FACTOR_SOURCE],
])
def test_input_errors(container, capsys, argv):
    code, out, err = run(container, capsys, *argv)
    assert code == EXIT_INPUT_ERROR
    assert out == ""
    assert err.startswith("error: ")


def test_usage_errors_exit_through_argparse(container):
    with pytest.raises(SystemExit) as info:
        main(["boundary", "(1+,0-)"], container=container)
    assert info.value.code == 2


def test_boundaries(container, capsys):
    middle = str(sub(TWO_FACTOR_MIDDLE, PAIR))
    assert run(container, capsys, "target", "-p", "5", TWO_FACTOR_SOURCE)[1] == middle + "\n"
    assert run(container, capsys, "source", "-p", "5", TWO_FACTOR_TARGET)[1] == middle + "\n"
    assert run(container, capsys, "boundary", "-p", "5", "--sign", "+", TWO_FACTOR_SOURCE)[1] == middle + "\n"


def test_compose(container, capsys):
    code, out, _ = run(container, capsys, "compose", "-p", "5", TWO_FACTOR_SOURCE, TWO_FACTOR_TARGET)
    assert code == EXIT_OK
    assert out == "(0-,5+);(2-,4+);(4-,2+);(5-,1+);(6+,0-)\n"


def test_decompose(container, capsys):
    assert run(container, capsys, "decompose", "(1+,0-);(0+,1+)")[1] == "((1+,0-) #0 (0+,1+))\n"


def test_decompose_capped(container, capsys):
    code, out, _ = run(container, capsys, "decompose", "--caps", "1,1,1", CUBE_ITEM_31)
    assert code == EXIT_OK
    expr = MoleculeSerializer.parse_expr(out)
    assert evaluate(expr, CUBE) == sub(CUBE_ITEM_31, CUBE)


def test_project_numbers_axes_from_one(container, capsys):
    code, out, _ = run(container, capsys, "project", "--axis", "2", "--level", "1", PAIRWISE_EXAMPLE)
    assert code == EXIT_OK
    assert out == str(sub(PAIRWISE_MIDDLE_LEVEL_1, Signature(2, (0, 1)))) + "\n"


def test_enumerate_to_stdout(container, capsys):
    code, out, _ = run(container, capsys, "enumerate", "--caps", "0,0,0")
    assert code == EXIT_OK
    assert out.splitlines() == [
        "# signature: factors=3 twists=0,0,0 caps=0,0,0",
        "# mode: capped",
        "# count: 1",
        "(0*,0*,0*)",
    ]


def test_enumerate_to_file(container, capsys, tmp_path):
    path = tmp_path / "cube.txt"
    code, out, _ = run(container, capsys, "enumerate", "--caps", "1,1,1", "--output", str(path))
    assert code == EXIT_OK
    assert out == f"57 entries written to {path}\n"
    assert len(CatalogFilesRepository().read(str(path)).entries) == 57


def test_oracle_check(container, capsys):
    assert run(container, capsys, "oracle-check", "--caps", "1,1,1", CUBE_ITEM_31)[:2] == (EXIT_OK, "molecule\n")
    code, out, _ = run(container, capsys, "oracle-check", "--caps", "1,1,1", "(1*,1*,0-);(1*,1*,0+)")
    assert (code, out) == (EXIT_NEGATIVE, "not-molecule: oracle\n")


def test_oracle_enumerate_with_axioms(container, capsys):
    code, out, _ = run(container, capsys, "oracle-enumerate", "--caps", "1,1", "--check-axioms")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "# signature: factors=2 twists=0,0 caps=1,1"
    assert lines[1] == "# mode: oracle"
    assert int(lines[2].split(": ")[1]) == len(lines) - 3


def test_oracle_enumerate_bound(container, capsys):
    code, _, err = run(container, capsys, "oracle-enumerate", "--caps", "1,1", "--max-atomsets", "5")
    assert code == EXIT_INPUT_ERROR
    assert "molecules" in err


@pytest.mark.parametrize("command", ["verify-paper-examples", "verify-examples"])
def test_verify_examples(container, capsys, command):
    code, out, _ = run(container, capsys, command)
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines
    assert all(line.startswith("ok ") for line in lines)
