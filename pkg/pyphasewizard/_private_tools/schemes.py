from .exceptions import BadCallError

schemes = ['homodyne-window', 'homodyne-zero', 'parity', 'zero-nonzero']

_aliases = {
    'window': 'homodyne-window',
    'homodyne': 'homodyne-zero',
    'z': 'zero-nonzero',
    'zero': 'zero-nonzero',
    }

def digest_scheme_name(name):

    output = None

    if not isinstance(name, str):
        raise BadCallError("The scheme name must be a string, got {!r}.".format(name))

    tmp_name = name.strip().lower().replace('_', '-').replace(' ', '-')

    if tmp_name in schemes:
        output = tmp_name
    elif tmp_name in _aliases:
        output = _aliases[tmp_name]
    else:
        raise BadCallError("Unknown detection scheme '{}'. Supported: {}.".format(name, ', '.join(schemes)))

    return output

def digest_scheme(scheme, p0=None):

    from pyphasewizard.interferometer import DetectionScheme

    output = None

    if isinstance(scheme, DetectionScheme):
        if p0 is not None and p0 != scheme.p0:
            raise BadCallError('The window half-width was given twice with different values.')
        output = scheme
    elif isinstance(scheme, str):
        name = digest_scheme_name(scheme)
        if name == 'homodyne-window':
            if p0 is None:
                raise BadCallError("The 'homodyne-window' scheme needs a window half-width p0.")
            output = DetectionScheme(name, float(p0))
        else:
            output = DetectionScheme(name)
    else:
        raise BadCallError("The detection scheme must be a DetectionScheme or a scheme name.")

    return output
