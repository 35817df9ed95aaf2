from atlab import SolverOptions
from atlab.cli import main


def test_defaults():
    opts = SolverOptions()
    assert opts.enum_cap == 24
    assert opts.search_edge_cap == 20
    assert opts.threads == 1
    assert opts.time_budget is None


def test_with_returns_new_instance():
    base = SolverOptions()
    tweaked = base.with_(enum_cap=30)
    assert tweaked.enum_cap == 30 and base.enum_cap == 24


def test_from_env(monkeypatch):
    monkeypatch.setenv("AT_LAB_THREADS", "3")
    monkeypatch.setenv("AT_LAB_ENUM_CAP", "26")
    monkeypatch.setenv("AT_LAB_TIME_BUDGET", "4.5")
    opts = SolverOptions.from_env()
    assert opts.threads == 3
    assert opts.enum_cap == 26
    assert opts.time_budget == 4.5
    # explicit overrides win
    assert SolverOptions.from_env(threads=1).threads == 1


def test_env_feeds_cli(monkeypatch, tmp_path, capsys):
    monkeypatch.setenv("AT_LAB_ENUM_CAP", "4")
    gpath = tmp_path / "c6.graph"
    main(["gen", "cycle", "6", "-o", str(gpath)])
    arcs = tmp_path / "arcs.txt"
    arcs.write_text("\n".join(f"{i} {(i + 1) % 6}" for i in range(6)) + "\n")
    capsys.readouterr()
    # 6 arcs > env cap 4: capacity exit
    assert main(["diff", str(gpath), str(arcs)]) == 3
    # the flag overrides the environment
    assert main(["diff", str(gpath), str(arcs), "--enum-cap", "6"]) == 0


def test_parallel_flag(tmp_path, capsys):
    g1 = tmp_path / "c3.graph"
    main(["gen", "cycle", "3", "-o", str(g1)])
    prod = tmp_path / "c3c3.graph"
    main(["product", str(g1), str(g1), "-o", str(prod)])
    capsys.readouterr()
    code = main(["at", str(prod), "--exact", "--edge-cap", "24", "--parallel"])
    out = capsys.readouterr().out
    assert code == 0 and "AT = 4" in out


def test_emitted_certificates_reverify(tmp_path, capsys):
    for family, n, mode in [("hypercube", "4", "--bipartite"), ("cycle", "5", "--exact")]:
        gpath = tmp_path / f"{family}{n}.graph"
        cpath = tmp_path / f"{family}{n}.cert"
        main(["gen", family, n, "-o", str(gpath)])
        assert main(["at", str(gpath), mode, "--cert", str(cpath)]) == 0
        capsys.readouterr()
        assert main(["verify", str(cpath)]) == 0
        assert "accepted" in capsys.readouterr().out
