import os
from logging import INFO


LOG_LEVEL = int(os.environ.get('LOG_LEVEL', INFO))

MULINL_SEED = int(os.environ.get('MULINL_SEED', 0))

MULINL_THREADS = max(1, int(os.environ.get('MULINL_THREADS', 1)))

APP_NAME = os.environ.get('APP_NAME', 'mulinl')
COMMAND_NAME = os.environ.get('COMMAND_NAME', 'python manager.py')
