import math
import numpy as np

from mulinl.utils.asynchronous import async_map
from mulinl.utils.logger import counted, \
                                logger
from mulinl.utils.random import stream_for


def round_half_up(value):
    return int(math.floor(value + 0.5))


class Sampler():

    def draw_subsets(self, pool, first_draw, count, iteration, stage):
        size = self.model.m_e
        subsets = np.empty((count, size), dtype=int)
        for offset in range(count):
            rng = stream_for(self.config.seed, iteration, stage, first_draw + offset)
            subsets[offset] = pool[rng.choice(len(pool), size=size, replace=False)]
        return subsets

    def draw_hypotheses(self, points, pool, count, iteration, stage):
        """Draws elemental subsets until count of them give a valid hypothesis.

        Draw d takes its subset from the stream (seed, iteration, stage, d),
        degenerate draws are skipped and do not count, and at most
        max_attempts * count draws are made. Gives the valid hypotheses in
        draw order, along with the number of draws made.
        """
        if len(pool) < self.model.m_e:
            return [], 0
        points = np.asarray(points, dtype=float)
        budget = self.config.max_attempts * count
        hypotheses = []
        drawn = 0
        while len(hypotheses) < count and drawn < budget:
            missing = count - len(hypotheses)
            if hypotheses:
                expected = math.ceil(missing * drawn / len(hypotheses))
            else:
                expected = missing if drawn == 0 else 2 * drawn
            batch = min(max(expected, missing), budget - drawn)
            subsets = self.draw_subsets(pool, drawn, batch, iteration, stage)
            drawn += batch
            for hypothesis in self.model.solve_elementals(points[subsets]):
                if hypothesis is not None and len(hypotheses) < count:
                    hypotheses.append(hypothesis)
        return hypotheses, drawn

    def sample_trials(self, points, pool, count, iteration, stage, evaluate):
        """Runs count trials on valid elemental subset hypotheses drawn from pool.

        Trial j gets the j-th valid hypothesis and hands it to
        evaluate(j, hypothesis). The returned list is in trial order, with
        None where evaluate gave up on a trial, and is shorter than count
        when the draw budget ran out first.
        """
        pool = np.asarray(pool)
        (hypotheses, drawn) = self.draw_hypotheses(points, pool, count, iteration, stage)

        skipped = drawn - len(hypotheses)
        if skipped:
            logger.debug(lambda: '{} out of {} skipped as degenerate'.format(counted(skipped, 'elemental subset'),
                                                                             drawn))
        if len(hypotheses) < count:
            logger.warning('only {} out of {} within {}'.format(counted(len(hypotheses), 'valid hypothesis'),
                                                                count,
                                                                counted(drawn, 'draw')))

        return list(async_map(evaluate,
                              range(len(hypotheses)),
                              hypotheses,
                              max_workers=self.config.max_workers))
