import io
import json

import pytest

from turanlab.cli import main
from turanlab.graph6 import graph6_parse, graph6_serialize
from turanlab.graphs import complete, cycle, path, turan

from conftest import are_isomorphic

P3 = graph6_serialize(path(3))
K2 = graph6_serialize(complete(2))
K3 = graph6_serialize(complete(3))
K4 = graph6_serialize(complete(4))


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, argv):
    code, out = run(capsys, argv)
    return code, json.loads(out)


def test_count_labeled(capsys):
    code, report = run_json(
        capsys, ["count", "--pattern", P3, "--host", K3, "--labeled"]
    )
    assert code == 0
    assert report["result"]["count"] == 6
    assert report["command"] == "count"


def test_count_unlabeled(capsys):
    code, report = run_json(
        capsys, ["count", "--pattern", P3, "--host", K3, "--unlabeled"]
    )
    assert code == 0 and report["result"]["count"] == 3


def test_count_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(K3 + "\n"))
    code, report = run_json(capsys, ["count", "--pattern", P3, "--host", "-"])
    assert code == 0 and report["result"]["count"] == 6


def test_construct_h1(capsys):
    code, report = run_json(capsys, ["construct", "h1", "--r", "3", "--a", "2"])
    assert code == 0
    wp = report["result"]["weighted_pattern"]
    assert wp["weights"] == [2, 1, 1, 1, 1, 2]
    assert graph6_parse(wp["pattern"]) == path(6)


def test_construct_g1(capsys):
    code, report = run_json(
        capsys,
        ["construct", "g1", "--r", "3", "--eps", "1/16", "--n", "160"],
    )
    assert code == 0
    assert report["result"]["weighted_pattern"]["weights"] == [120, 10, 10, 10, 10]


def test_construct_fig4(capsys):
    code, report = run_json(
        capsys, ["construct", "fig4", "--sizes", "1,1,1,1,1,1"]
    )
    assert code == 0
    g = graph6_parse(report["result"]["explicit_graph6"])
    assert g.n == 16 and g.edge_count() == 15


def test_construct_standard_graphs(capsys):
    code, report = run_json(capsys, ["construct", "turan", "--n", "6", "--r", "3"])
    assert code == 0 and report["result"]["edges"] == 12
    code, report = run_json(capsys, ["construct", "cycle", "--r", "5"])
    assert code == 0 and graph6_parse(report["result"]["graph6"]) == cycle(5)
    code, report = run_json(capsys, ["construct", "petersen"])
    assert code == 0 and report["result"]["order"] == 10
    code, report = run_json(
        capsys, ["construct", "blowup", "--graph", K2, "--sizes", "2,3"]
    )
    assert code == 0 and report["result"]["edges"] == 6
    code, report = run_json(
        capsys,
        ["construct", "power", "--graph", graph6_serialize(cycle(5)), "--k", "2"],
    )
    assert code == 0 and report["result"]["edges"] == 10


def test_poly_eval_mode(capsys, monkeypatch):
    code, built = run(
        capsys,
        ["poly", "--pattern-h", K2, "--weights", "1,1", "--pattern-f", K2],
    )
    assert code == 0
    monkeypatch.setattr("sys.stdin", io.StringIO(built))
    code, report = run_json(capsys, ["poly", "eval", "--sizes", "3,4"])
    assert code == 0 and report["result"]["value"] == 24


def test_poly_eval_requires_sizes(capsys):
    code = main(["poly", "eval"])
    assert code == 1


def test_poly_with_eval(capsys):
    code, report = run_json(
        capsys,
        [
            "poly",
            "--pattern-h", K2,
            "--weights", "1,1",
            "--pattern-f", K2,
            "--sizes", "3,4",
        ],
    )
    assert code == 0
    assert report["result"]["value"] == 24
    assert report["result"]["polynomial"]["terms"] == [
        {"fibers": [1, 1], "coeff": 2}
    ]


def test_verify_true_exit_zero(capsys):
    code, report = run_json(
        capsys,
        ["verify-t1", "--r", "3", "--eps", "1/16", "--a", "13", "--n", "208"],
    )
    assert code == 0
    assert report["result"]["outcome"] is True


def test_verify_false_exit_two(capsys):
    code, report = run_json(
        capsys,
        ["verify-t1", "--r", "3", "--eps", "1/16", "--a", "13", "--n", "48"],
    )
    assert code == 2
    assert report["result"]["outcome"] is False


def test_verify_search_mode(capsys):
    code, report = run_json(
        capsys, ["verify-t1", "--r", "3", "--eps", "1/16", "--exact-bipartite"]
    )
    assert code == 0
    assert report["result"]["outcome"] is True
    assert report["result"]["params"]["n"] == 208
    assert report["result"]["params"]["a"] == 13


def test_verify_rejects_decimal_eps(capsys):
    with pytest.raises(SystemExit) as err:
        main(["verify-t1", "--r", "3", "--eps", "0.0625", "--n", "48"])
    assert err.value.code == 64


def test_unknown_flag_exit_64(capsys):
    with pytest.raises(SystemExit) as err:
        main(["count", "--pattern", P3, "--host", K3, "--bogus"])
    assert err.value.code == 64


def test_bad_graph6_exit_one(capsys):
    code = main(["count", "--pattern", "!!!", "--host", K3])
    assert code == 1


def test_oracle(capsys):
    code, report = run_json(
        capsys, ["oracle", "--n", "5", "--h", K2, "--f", K3]
    )
    assert code == 0
    assert report["result"]["max_count"] == 6
    extremal = report["result"]["extremal_graph6"]
    assert len(extremal) == 1
    assert are_isomorphic(graph6_parse(extremal[0]), turan(5, 2))


def test_oracle_csv(capsys):
    code, out = run(
        capsys, ["oracle", "--n", "4", "--h", K2, "--f", K3, "--csv"]
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,h,f,max_count,extremal"
    assert lines[1].startswith("4,")
    assert lines[1].split(",")[3] == "4"


def test_t2_report(capsys):
    code, report = run_json(
        capsys,
        ["t2", "--profile", '{"s":1,"t":2,"a":[1],"b":[0,0]}', "--n", "8"],
    )
    assert code == 0
    result = report["result"]
    assert result["outcome"] is True
    assert result["double_star_identity_ok"] is True
    assert result["best_bipartite_h"]["m"] == 2
    assert result["muirhead_side_s"]["outcome"] is True


def test_t2_csv(capsys):
    code, out = run(
        capsys,
        [
            "t2",
            "--profile", '{"s":1,"t":1,"a":[1],"b":[1]}',
            "--n", "6",
            "--csv",
        ],
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "m,h_unlabeled_copies"
    assert len(lines) == 6  # m = 1..5


def test_optimize(capsys):
    code, report = run_json(
        capsys,
        [
            "optimize",
            "--h-pattern", json.dumps({"pattern": K2, "weights": [1, 1]}),
            "--f", K2,
            "--restarts", "5",
        ],
    )
    assert code == 0
    assert abs(report["result"]["value"] - 0.5) < 1e-8


def test_catalog_search(capsys):
    code, report = run_json(
        capsys,
        [
            "catalog-search",
            "--h-pattern", json.dumps({"pattern": K2, "weights": [1, 1]}),
            "--r", "3",
            "--restarts", "5",
        ],
    )
    assert code == 0
    ranking = report["result"]["ranking"]
    assert len(ranking) == 4
    assert ranking[0]["pattern_order"] == 2


def test_reports_byte_identical_modulo_walltime(capsys):
    argv = ["count", "--pattern", P3, "--host", K3]
    _, first = run(capsys, argv)
    _, second = run(capsys, argv)
    a = json.loads(first)
    b = json.loads(second)
    a.pop("wall_time_s")
    b.pop("wall_time_s")
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_budget_env_var(capsys, monkeypatch):
    monkeypatch.setenv("TURANLAB_BUDGET", "10")
    code = main(
        [
            "poly",
            "--pattern-h", graph6_serialize(cycle(5)),
            "--weights", "2,2,2,2,2",
            "--pattern-f", graph6_serialize(complete(4)),
        ]
    )
    assert code == 1  # budget exhaustion surfaces as a clean error
