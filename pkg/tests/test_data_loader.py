"""Tests for the text / JSON hypergraph formats and the table fixture."""

import io
import json

import pytest

from src.clutters import uniform
from src.config import EXAMPLES_DIR
from src.data_loader import (
    clutter_to_dict, format_clutter, format_hypergraph, hypergraph_from_dict,
    hypergraph_to_dict, load_paper_tables, parse_hypergraph, parse_hypergraph_json,
    read_hypergraph, write_hypergraph
)
from src.errors import EmptyEdge, HypergraphFormatError, NotAClutter, VertexOutOfRange
from src.hypergraph import validate
from src.utils import parse_vertex_list

WORKED_EXAMPLE_TEXT = """\
# three edges through vertex 1
n 4
e 1 2 3
e 1 2 4
e 1 3 4   # trailing comment
"""


def test_parse_text_format(worked_example):
    assert parse_hypergraph(WORKED_EXAMPLE_TEXT) == worked_example


def test_format_text_format(worked_example):
    assert format_hypergraph(worked_example) == "n 4\ne 1 2 3\ne 1 2 4\ne 1 3 4\n"


def test_format_clutter():
    assert format_clutter(uniform(3, 2)) == "n 3\ne 1 2\ne 1 3\ne 2 3\n"


@pytest.mark.parametrize("text", [
    "e 1 2\n",
    "n 3\nn 3\n",
    "n 3\ne 1 x\n",
    "n 3\nq 1 2\n",
    "n\n",
    "",
])
def test_parse_rejects_malformed_text(text):
    with pytest.raises(HypergraphFormatError):
        parse_hypergraph(text)


def test_parse_surfaces_validation_errors():
    with pytest.raises(NotAClutter):
        parse_hypergraph("n 3\ne 1 2\ne 1 2 3\n")
    with pytest.raises(VertexOutOfRange):
        parse_hypergraph("n 3\ne 1 4\n")
    with pytest.raises(EmptyEdge):
        parse_hypergraph("n 3\ne\n")


def test_parse_edgeless():
    h = parse_hypergraph("n 2\n")
    assert h.n == 2 and h.num_edges == 0


def test_json_format(worked_example):
    data = hypergraph_to_dict(worked_example)
    assert data == {'vertices': 4, 'edges': [[1, 2, 3], [1, 2, 4], [1, 3, 4]]}
    assert hypergraph_from_dict(data) == worked_example
    assert parse_hypergraph_json(json.dumps(data)) == worked_example
    assert clutter_to_dict(uniform(2, 1)) == {'vertices': 2, 'edges': [[1], [2]]}


@pytest.mark.parametrize("text", [
    "{",
    "[]",
    '{"vertices": 3}',
    '{"vertices": 3, "edges": 5}',
    '{"vertices": 3, "edges": [3, 4]}',
    '{"vertices": 3, "edges": [[1, 2], 4]}',
    '{"vertices": true, "edges": [[1]]}',
])
def test_json_rejects_malformed_input(text):
    with pytest.raises(HypergraphFormatError):
        parse_hypergraph_json(text)


def test_read_and_write_files(tmp_path, worked_example):
    text_path = write_hypergraph(worked_example, tmp_path / "h.txt")
    json_path = write_hypergraph(worked_example, tmp_path / "nested" / "h.json")

    assert read_hypergraph(text_path) == worked_example
    assert read_hypergraph(json_path) == worked_example
    assert json.loads(json_path.read_text())['vertices'] == 4


def test_read_detects_json_without_suffix(tmp_path, worked_example):
    path = tmp_path / "h.dat"
    path.write_text(json.dumps(hypergraph_to_dict(worked_example)))
    assert read_hypergraph(path) == worked_example


def test_read_from_stdin(monkeypatch, worked_example):
    monkeypatch.setattr("sys.stdin", io.StringIO(WORKED_EXAMPLE_TEXT))
    assert read_hypergraph("-") == worked_example


def test_read_missing_file(tmp_path):
    with pytest.raises(HypergraphFormatError):
        read_hypergraph(tmp_path / "missing.txt")


def test_read_unreadable_sources(tmp_path):
    with pytest.raises(HypergraphFormatError):
        read_hypergraph(tmp_path)

    path = tmp_path / "bad.txt"
    path.write_bytes(b"n 3\ne 1 2 \xff\n")
    with pytest.raises(HypergraphFormatError):
        read_hypergraph(path)


def test_shipped_examples_parse(worked_example, triangle_with_tail, eight_vertex_graph):
    assert read_hypergraph(f"{EXAMPLES_DIR}/worked_example.txt") == worked_example
    assert read_hypergraph(f"{EXAMPLES_DIR}/immune_not_upward_closed.txt") == triangle_with_tail
    assert read_hypergraph(f"{EXAMPLES_DIR}/eight_vertex_graph.txt") == eight_vertex_graph


def test_load_paper_tables():
    paper = load_paper_tables()
    assert len(paper['table1']) == 28
    assert len(paper['table2']) == 28

    row = paper['table1'][9]
    assert row['index'] == (4, 2)
    assert row['hypergraph'] == validate(4, [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]])
    assert (row['F1'], row['F2'], row['I1'], row['I2']) == ((4, 10), (4, 2), (4, 2), (4, 10))

    assert paper['table2'][(4, 6)] == {'F1': [], 'F2': [], 'I1': [], 'I2': []}
    assert paper['table2'][(2, 1)]['I1'] == [(2, 1), (3, 3), (4, 4)]


def test_load_paper_tables_missing(tmp_path):
    with pytest.raises(HypergraphFormatError):
        load_paper_tables(tmp_path / "none.json")


def test_parse_vertex_list():
    assert parse_vertex_list("7, 1,2,1") == [1, 2, 7]
    assert parse_vertex_list("  ") == []
    with pytest.raises(HypergraphFormatError):
        parse_vertex_list("1,a")
