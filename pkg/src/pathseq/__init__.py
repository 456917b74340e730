"""Path sequences of graphs: exact counting oracles, closed forms for several
graph families, parameter recovery, and collision search."""

from pathseq.closed_forms import sequence_of
from pathseq.generators import build, rho
from pathseq.graph_core import Graph, parse_graph6, write_graph6
from pathseq.identify import identify
from pathseq.path_oracle import path_sequence_dfs, path_sequence_dp

__all__ = ["Graph", "build", "identify", "parse_graph6", "path_sequence_dfs", "path_sequence_dp",
           "rho", "sequence_of", "write_graph6"]
