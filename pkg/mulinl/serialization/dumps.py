import json


FLOAT_DIGITS = 17


def fixed_precision(value):
    if value != value:
        return 'NaN'
    if value in (float('inf'), float('-inf')):
        return 'Infinity' if value > 0 else '-Infinity'
    text = '{:.{}g}'.format(value, FLOAT_DIGITS)
    if '.' not in text and 'e' not in text:
        text += '.0'
    return text


class FixedPrecisionEncoder(json.JSONEncoder):
    # pylint: disable=W0212
    def iterencode(self, o, _one_shot=False):
        markers = {} if self.check_circular else None
        encoder = json.encoder.encode_basestring_ascii if self.ensure_ascii \
                  else json.encoder.encode_basestring
        _iterencode = json.encoder._make_iterencode(markers,
                                                    self.default,
                                                    encoder,
                                                    self.indent,
                                                    fixed_precision,
                                                    self.key_separator,
                                                    self.item_separator,
                                                    self.sort_keys,
                                                    self.skipkeys,
                                                    False)
        return _iterencode(o, 0)


def dumps(value, indent=2):
    return json.dumps(value, cls=FixedPrecisionEncoder, indent=indent)
