from mulinl.synthetic.scene import *
from mulinl.synthetic.generate import generate
from mulinl.synthetic.match import *
