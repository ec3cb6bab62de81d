from leafspan.dead.base import BaseStats, build_base, check_pendant_structure
from leafspan.dead.cubic import grow_cubic
from leafspan.dead.fallback import fallback, leafy_tree
from leafspan.dead.forest import ForestState, PotentialLedger, StepRecord, potential
from leafspan.dead.runner import run_to_spanning_tree
from leafspan.dead.steps import STEP_BOUNDS, StepPlan, apply_step, find_step
