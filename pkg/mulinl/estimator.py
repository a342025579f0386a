from dataclasses import replace

from mulinl.bases.pipeline import EstimatorConfig, \
                                  Pipeline
from mulinl.models.model import ProblemModel


class Estimator(Pipeline):
    """Finds the structures of one problem model in a point set, strongest first.

    e.g. Estimator('line2d', trials=1000, seed=3).run(points)
         Estimator('line2d', config, seed=4), overrides win over the given config
    """

    def __init__(self, model, config=None, **config_overrides):
        if config is None:
            config = EstimatorConfig(**config_overrides)
        elif config_overrides:
            config = replace(config, **config_overrides)
        self.config = config.validate()
        if isinstance(model, str):
            model = ProblemModel.model_from_name(model, **self.config.model_options())
        self.model = model

    def __repr__(self):
        return '<{} {} trials={} seed={}>'.format(self.__class__.__name__,
                                                  self.model.name,
                                                  self.config.trials,
                                                  self.config.seed)
