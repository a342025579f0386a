from mulinl.serialization.as_dict import *
from mulinl.serialization.dumps import *
from mulinl.serialization.serialize import *
