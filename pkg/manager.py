import sys
from argh import ArghParser

from commands import import_commands
from mulinl.estimation_errors import EstimationErrors
from mulinl.utils.config import COMMAND_NAME
from mulinl.utils.logger import logger


class MulinlParser(ArghParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, '{}: error: {}\n'.format(self.prog, message))


def create_parser():
    parser = MulinlParser(prog=COMMAND_NAME)
    parser.add_commands(import_commands())
    return parser


def main(argv=None):
    parser = create_parser()
    try:
        parser.dispatch(argv=argv)
    except EstimationErrors as errors:
        logger.error(lambda: '{}: {}'.format(errors.__class__.__name__, errors))
        return errors.exit_code
    except OSError as error:
        logger.error(lambda: '{}: {}'.format(error.__class__.__name__, error))
        return EstimationErrors.exit_code
    return 0


if __name__ == '__main__':
    sys.exit(main())
