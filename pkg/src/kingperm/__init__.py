"""King-non-attacking permutations and their containment poset."""

from .deletion import (SeparatorReport, delete_position, delete_value,
                       delete_values, sep_h, sep_v, separators)
from .inflation import (InflationDecomposition, inflate, is_separable,
                        quadblock_decompose)
from .kingdom import (count_kings, generate_kings, has_prince,
                      kings_without_princes, princes)
from .mobius import MobiusTable, is_in_H, mobius, mobius_bottom, mobius_downset_labels
from .patterns import (PatternOccurrence, avoids, contains, distinct_subpatterns,
                       occurrences)
from .perm_core import (BlockSpan, Permutation, ascii_plot, blocks, breadth,
                        inverse, is_k_prolific, is_king, is_simple,
                        manhattan_distance, reverse, standardize,
                        strict_k_blocks)
from .poset import (Chain, KingDownset, covers_below, deletion_pairs, downset,
                    find_chain, hasse_dot, intermediate_king, interval)

__version__ = "0.1.0"
