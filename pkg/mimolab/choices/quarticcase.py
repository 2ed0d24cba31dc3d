from enum import Enum

__all__ = ('QuarticCase',)


class QuarticCase(str, Enum):
    # E{h^H h}
    NORM = 'norm'
    # E{h_lm^H h_lm h_sk^H h_sk}
    NORM_PRODUCT_SAME = 'norm_product_same'
    NORM_PRODUCT_DISTINCT = 'norm_product_distinct'
    # E{|h_m^H h_k|^2}
    CROSS_SAME = 'cross_same'
    CROSS_DISTINCT = 'cross_distinct'
    # E{|h_llm^H h_llk|^2 |h_ssm^H h_ssi|^2}
    SAME_CELL_ALL_EQUAL = 'same_cell_all_equal'
    SAME_CELL_PAIR = 'same_cell_pair'
    SAME_CELL_SHARED_VICTIM = 'same_cell_shared_victim'
    SAME_CELL_ALL_DISTINCT = 'same_cell_all_distinct'
    OTHER_CELL_ALL_EQUAL = 'other_cell_all_equal'
    OTHER_CELL_DISTINCT = 'other_cell_distinct'
    OTHER_CELL_SHARED_VICTIM = 'other_cell_shared_victim'

    def __str__(self):
        return {
            'norm': 'E{h^H h}',
            'norm_product_same': 'E{|h|^4}, same link',
            'norm_product_distinct': 'E{|h|^2 |g|^2}, distinct links',
            'cross_same': 'E{|h_m^H h_k|^2}, k = m',
            'cross_distinct': 'E{|h_m^H h_k|^2}, k != m',
            'same_cell_all_equal': 'same cell, i = k = m',
            'same_cell_pair': 'same cell, i = k, k != m',
            'same_cell_shared_victim': 'same cell, i != k, k = m or i = m',
            'same_cell_all_distinct': 'same cell, i != k, k != m, i != m',
            'other_cell_all_equal': 'other cell, i = k = m',
            'other_cell_distinct': 'other cell, k != m, i != m',
            'other_cell_shared_victim': 'other cell, i != k, k = m or i = m',
        }[self.value]
