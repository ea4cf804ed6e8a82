"""End-to-end smoke tests for the python module."""

import pytest

import rgt


def test_programs_inventory():
    names = rgt.program_names()
    assert set(names) == {
        "is-connected",
        "is-discrete",
        "is-dag",
        "component-numbering",
        "bfs",
    }
    dag = rgt.build_program("is-dag")
    assert "DFS" in dag.procedures
    assert "next_edge" in dag.rules


def test_is_dag_on_cycle_fails():
    prog = rgt.build_program("is-dag")
    g = rgt.generate("cycle", 50)
    res = rgt.run(prog, g)
    assert res.outcome == rgt.Outcome.failure


def test_bfs_paints_everything_blue():
    prog = rgt.build_program("bfs")
    g = rgt.generate("grid", 25, width=5, height=5)
    res = rgt.run(prog, g)
    assert res.outcome == rgt.Outcome.success
    assert all(g.node_mark(n) == rgt.NodeMark.blue for n in g.nodes())
    assert all(g.edge_mark(e) == rgt.EdgeMark.blue for e in g.edges())


def test_component_numbering_ids():
    prog = rgt.build_program("component-numbering")
    g = rgt.generate("kkstar", 1, k=3)
    res = rgt.run(prog, g)
    assert res.outcome == rgt.Outcome.success
    ids = {g.node_label(n)[-1] for n in g.nodes()}
    assert ids == {1, 2, 3}


def test_graph_building_and_counters():
    g = rgt.HostGraph(rgt.Backend.indexed)
    a = g.add_node(["a", 1], rgt.NodeMark.red, rooted=True)
    b = g.add_node()
    e = g.add_edge(a, b, [5])
    assert g.node_count == 2 and g.edge_count == 1
    assert g.source(e) == a and g.target(e) == b
    assert g.node_label(a) == ["a", 1]
    g.reset_counters()
    assert g.first_host_node(rgt.NodeMark.red) == a
    assert g.counters().steps == 1
    g.check_invariants()


def test_backends_agree():
    gi = rgt.random_digraph(40, 80, seed=7, backend=rgt.Backend.indexed)
    gl = rgt.random_digraph(40, 80, seed=7, backend=rgt.Backend.legacy)
    assert rgt.observably_equal(gi, gl)
    prog = rgt.build_program("is-connected")
    ri = rgt.run(prog, gi.copy())
    rl = rgt.run(prog, gl.copy())
    assert ri.outcome == rl.outcome


def test_parse_round_trip():
    text = '[ (n0(R), "a":1 # red) (n1, empty # grey) | (e0, n0, n1, 5) ]'
    g = rgt.parse_host_graph(text)
    assert g.node_count == 2
    again = rgt.parse_host_graph(rgt.print_host_graph(g))
    assert rgt.observably_equal(g, again)
    with pytest.raises(ValueError):
        rgt.parse_host_graph("[ (n0, empty")


def test_parsed_program_runs():
    prog = rgt.parse_program("Main = (paint)!")
    rgt.attach_rules(
        prog,
        "paint(x:list) [ (1, x # grey) | ] => [ (1, x # blue) | ] interface {1}",
    )
    g = rgt.generate("discrete", 5)
    res = rgt.run(prog, g)
    assert res.outcome == rgt.Outcome.success
    assert res.rule_apps == 5


def test_budget():
    prog = rgt.build_program("bfs")
    g = rgt.generate("list", 1000)
    with pytest.raises(rgt.BudgetExceededError):
        rgt.run(prog, g, max_steps=10)


def test_bench_record():
    g = rgt.generate("star", 100, backend=rgt.Backend.legacy)
    rec = rgt.run_bench("is-discrete", g, family="star")
    assert rec.outcome == "failure"
    assert rec.size == 199
    assert rec.steps > 0
