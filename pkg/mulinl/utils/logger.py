from logging import basicConfig, \
                    getLogger, \
                    CRITICAL, \
                    DEBUG, \
                    ERROR, \
                    INFO, \
                    WARNING, \
                    log
import inflect

from mulinl.utils.config import LOG_LEVEL


basicConfig(format='%(asctime)s %(levelname)-8s %(message)s',
            level=LOG_LEVEL,
            datefmt='%Y-%m-%d %H:%M:%S')

INFLECT_ENGINE = inflect.engine()


class AttrDict(dict):
    def __init__(self, *args, **kwargs):
        super(AttrDict, self).__init__(*args, **kwargs)
        self.__dict__ = self


# log.debug(XXX) calls do not evaluate XXX below their level:
# args may be lambdas that only get called when the level is enabled,
# the per-trial diagnostics being costly to format.
def mulinl_logging(level, *args):
    if getLogger().isEnabledFor(level):
        evaled_args = map(lambda a: a() if callable(a) else a,
                          args)
        log(level, *evaled_args)


def counted(count, word):
    return '{} {}'.format(count, INFLECT_ENGINE.plural(word, count))


logger = AttrDict()
logger.critical = lambda *args: mulinl_logging(CRITICAL, *args)
logger.debug = lambda *args: mulinl_logging(DEBUG, *args)
logger.error = lambda *args: mulinl_logging(ERROR, *args)
logger.info = lambda *args: mulinl_logging(INFO, *args)
logger.warning = lambda *args: mulinl_logging(WARNING, *args)
