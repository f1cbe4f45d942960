from .combinat import (DecoratedPermutation, Partition, Permutation, Subset,
                       decorated_count, decorated_perms, elements_of, full_mask,
                       mask_label, mask_of, multinomial, partitions, permutations,
                       popcount, relabel_mask, submasks)
from .poly import (BiPoly, CyclotomicResidue, UniPoly, cyclotomic, eval_at_root_of_unity,
                   q_binomial, q_factorial, q_int, q_multinomial)
from .words import (BARRED, BARRED_ZERO, INF, PLAIN, Bar, Order, barred_word, des,
                    des_positions, des_set, dex, dex_decorated, exc, exc_positions,
                    exc_set, inv, maj, perm_maj, shuffles)
