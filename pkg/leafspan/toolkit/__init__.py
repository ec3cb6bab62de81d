from leafspan.toolkit.fileio import (
    dumps_graph,
    dumps_tree,
    loads_graph,
    loads_tree,
    read_graph,
    read_tree,
    write_graph,
    write_tree,
)
from leafspan.toolkit.generators import (
    GenSpec,
    atlas,
    chain,
    cubic,
    gadget,
    generate,
    glue,
    petersen,
    random_graph,
)
