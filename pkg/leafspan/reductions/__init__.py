from leafspan.reductions.apply import BUILDERS, apply_reduction, rebuild
from leafspan.reductions.detect import find_reduction
from leafspan.reductions.lift import expand_vertex, lift
from leafspan.reductions.paths import PathOutcome, PathResult, grow_leaf_path
from leafspan.reductions.steps import LiftedTree, ReductionKind, ReductionStep
