from leafspan.graph.core import Edge, Graph, SpanningForest, edge
from leafspan.graph.structure import (
    bridges,
    check_tree,
    component_of,
    connected_components,
    cutpoints,
    is_biconnected,
    is_connected,
)
