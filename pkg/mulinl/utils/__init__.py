from mulinl.utils.asynchronous import *
from mulinl.utils.dataset import *
from mulinl.utils.logger import *
from mulinl.utils.random import *
