import logging

import numpy as np

from mimolab.choices import QuarticCase
from mimolab.models import MomentEntry, MomentVerificationReport, NetworkConfig, SeedPath
from mimolab.settings import get_lab_settings
from mimolab.utils.mrt import gaussian_quartic_moments, component_moments, sinr_components
from mimolab.utils.rng import trial_generator
from mimolab.utils.statistics import estimate_scv, scv_standard_error, standard_error
from mimolab.utils.trial import draw_cluster, realized_zf_terms
from mimolab.utils.zf import zf_error_power

logger = logging.getLogger(__name__)

__all__ = ('MomentVerificationJob',)

# inverse-Wishart traces need a few spare dimensions for a finite variance
ZF_MIN_MARGIN = 4


def _norm2(x):
    return np.vdot(x, x).real


def _cross2(x, y):
    return abs(np.vdot(x, y)) ** 2


class MomentVerificationJob:
    case_id = 'moments'

    def __init__(self, **kwargs):
        settings = get_lab_settings()
        self.cfg: NetworkConfig = kwargs.get('cfg')
        self.n_trials = kwargs.get('n_trials') or settings.simulation.moment_trials
        self.master_seed = settings.master_seed if kwargs.get('master_seed') is None else kwargs['master_seed']
        self.z_limit = kwargs.get('z_limit', 3.0)

    def available_cases(self):
        K, L_p = self.cfg.K, self.cfg.L_p
        cases = [QuarticCase.NORM, QuarticCase.NORM_PRODUCT_SAME, QuarticCase.CROSS_SAME, QuarticCase.SAME_CELL_ALL_EQUAL]
        if K >= 2:
            cases += [QuarticCase.NORM_PRODUCT_DISTINCT, QuarticCase.CROSS_DISTINCT, QuarticCase.SAME_CELL_PAIR, QuarticCase.SAME_CELL_SHARED_VICTIM]
        if K >= 3:
            cases.append(QuarticCase.SAME_CELL_ALL_DISTINCT)
        if L_p >= 1:
            cases.append(QuarticCase.OTHER_CELL_ALL_EQUAL)
        if L_p >= 1 and K >= 2:
            cases += [QuarticCase.OTHER_CELL_DISTINCT, QuarticCase.OTHER_CELL_SHARED_VICTIM]
        return cases

    def sample_moments(self, estimates) -> dict:
        """One realization of every Gaussian moment; m = 0 is the victim user."""
        u = estimates[0, 0]
        values = {
            QuarticCase.NORM: _norm2(u),
            QuarticCase.NORM_PRODUCT_SAME: _norm2(u) ** 2,
            QuarticCase.CROSS_SAME: _norm2(u) ** 2,
            QuarticCase.SAME_CELL_ALL_EQUAL: _norm2(u) ** 4,
        }
        if self.cfg.K >= 2:
            v = estimates[0, 1]
            values[QuarticCase.NORM_PRODUCT_DISTINCT] = _norm2(u) * _norm2(v)
            values[QuarticCase.CROSS_DISTINCT] = _cross2(u, v)
            values[QuarticCase.SAME_CELL_PAIR] = _cross2(u, v) ** 2
            values[QuarticCase.SAME_CELL_SHARED_VICTIM] = _norm2(u) ** 2 * _cross2(u, v)
        if self.cfg.K >= 3:
            values[QuarticCase.SAME_CELL_ALL_DISTINCT] = _cross2(u, estimates[0, 1]) * _cross2(u, estimates[0, 2])
        if self.cfg.L_p >= 1:
            w = estimates[1, 0]
            values[QuarticCase.OTHER_CELL_ALL_EQUAL] = _norm2(u) ** 2 * _norm2(w) ** 2
            if self.cfg.K >= 2:
                values[QuarticCase.OTHER_CELL_DISTINCT] = _cross2(u, estimates[0, 1]) * _cross2(w, estimates[1, 1])
                values[QuarticCase.OTHER_CELL_SHARED_VICTIM] = _norm2(u) ** 2 * _cross2(w, estimates[1, 1])
        return values

    def sample_error_power(self, cluster) -> float:
        cfg = self.cfg
        total = 0.0
        for station in range(cfg.n_cells):
            error = cluster.error(station, 0, 0, cfg)
            total += float(np.sum(np.abs(cluster.estimates[station].conj() @ error) ** 2))
        return total / (cfg.K * cfg.n_cells * cfg.M)

    def zf_enabled(self) -> bool:
        return self.cfg.delta - self.cfg.K >= ZF_MIN_MARGIN

    def run(self) -> MomentVerificationReport:
        cfg = self.cfg
        samples = {}

        for trial_index in range(self.n_trials):
            rng = trial_generator(SeedPath(self.master_seed, self.case_id, cfg.M, trial_index))
            cluster = draw_cluster(cfg, rng)
            breakdown = sinr_components(cluster.estimates, cfg)

            record = {case.value: value for case, value in self.sample_moments(cluster.estimates).items()}
            record['P_s'] = breakdown.P_s
            record['P_i_in'] = breakdown.P_i_in
            record['P_i_out'] = breakdown.P_i_out
            record['P_e'] = self.sample_error_power(cluster)
            if self.zf_enabled():
                gram = cluster.estimates[0] @ cluster.estimates[0].conj().T
                record['zf_inverse_gram_trace'] = float(np.trace(np.linalg.inv(gram)).real)
                record['zf_error_power'] = realized_zf_terms(cluster, cfg).error_power
            for name, value in record.items():
                samples.setdefault(name, []).append(value)

        entries = self.moment_entries(samples) + self.component_entries(samples)
        report = MomentVerificationReport(n_trials=self.n_trials, entries=entries, diagnostics=self.diagnostic_entries(samples), z_limit=self.z_limit)
        logger.info('Moment verification at M=%s, K=%s, L_p=%s: max |z| = %.3f', cfg.M, cfg.K, cfg.L_p, report.max_abs_z)
        return report

    def moment_entries(self, samples):
        cfg = self.cfg
        entries = []
        for case in self.available_cases():
            values = np.asarray(samples[case.value])
            exact = gaussian_quartic_moments(cfg.delta, cfg.Q, cfg.c_eff, case, exact=True)
            clt = gaussian_quartic_moments(cfg.delta, cfg.Q, cfg.c_eff, case)
            entries.append(MomentEntry(name=case.value, analytic=exact, empirical=float(values.mean()), standard_error=standard_error(values), clt_value=clt))
        return entries

    def component_entries(self, samples):
        cfg = self.cfg
        moments = component_moments(cfg)
        analytic = {'P_s': moments.p_s_mean, 'P_e': moments.p_e}
        if cfg.K >= 2:
            analytic['P_i_in'] = moments.p_i_in_mean
        if cfg.L_p >= 1:
            analytic['P_i_out'] = moments.p_i_out_mean
        if self.zf_enabled():
            analytic['zf_inverse_gram_trace'] = cfg.c_eff * cfg.K / (cfg.Q * (cfg.delta - cfg.K))
            analytic['zf_error_power'] = zf_error_power(cfg)

        entries = []
        for name, value in analytic.items():
            values = np.asarray(samples[name])
            entries.append(MomentEntry(name=name, analytic=value, empirical=float(values.mean()), standard_error=standard_error(values)))
        return entries

    def diagnostic_entries(self, samples):
        moments = component_moments(self.cfg)
        entries = []
        for name, analytic in (('P_s', moments.p_s_scv), ('P_i_out', moments.p_i_out_scv)):
            if analytic is None:
                continue
            values = np.asarray(samples[name])
            entries.append(MomentEntry(name=f'scv_{name}', analytic=analytic, empirical=estimate_scv(values), standard_error=scv_standard_error(values)))
        return entries
