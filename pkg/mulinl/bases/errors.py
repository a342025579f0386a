from mulinl.estimation_errors import EstimationErrors


class ConfigError(EstimationErrors):
    exit_code = 1


class UnknownModelError(EstimationErrors):
    exit_code = 1


class UnknownScenarioError(EstimationErrors):
    exit_code = 1


class ColumnMismatchError(EstimationErrors):
    pass


class DegenerateDataError(EstimationErrors):
    pass


class InvalidInputError(EstimationErrors):
    pass


class InvalidSceneError(EstimationErrors):
    pass


class ModeNotFoundError(EstimationErrors):
    pass


class StructureNotFoundError(EstimationErrors):
    pass


class TooFewPointsError(EstimationErrors):
    pass


class UnreadableFileError(EstimationErrors):
    pass


class UnwritableFileError(EstimationErrors):
    pass
