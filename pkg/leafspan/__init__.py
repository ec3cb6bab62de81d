from leafspan.config import Settings, get_settings
from leafspan.cost import BoundReport, bound_report, graph_cost
from leafspan.exceptions import InputError, InvariantBreach, LeafSpanException
from leafspan.graph import Graph, SpanningForest, check_tree
from leafspan.oracle import OracleResult, max_leaf_exact, max_leaf_lower_bound_check
from leafspan.solver import Certificate, replay, solve

__version__ = "1.0.0"
