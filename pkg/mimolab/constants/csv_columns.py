__all__ = ('CSV_COLUMNS', 'SUMMARY_KEYS')

CSV_COLUMNS = ('case_id', 'M', 'metric', 'value', 'stderr')

SUMMARY_KEYS = ('case_id', 'r_s_theoretical', 'r_s_fitted', 'applicability', 'deterministic')
