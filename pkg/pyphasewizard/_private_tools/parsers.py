import numpy as np

from .exceptions import BadCallError

grid_separator = ':'
list_separator = ','

def digest_grid(grid):

    output = None

    if isinstance(grid, str):
        fields = grid.split(grid_separator)
        if len(fields) != 3:
            raise BadCallError("A phase grid reads 'start:end:points', got '{}'.".format(grid))
        try:
            start = float(fields[0])
            end = float(fields[1])
            points = int(fields[2])
        except ValueError:
            raise BadCallError("A phase grid reads 'start:end:points', got '{}'.".format(grid))
    else:
        start, end, points = grid
        start, end, points = float(start), float(end), int(points)

    if points < 2:
        raise BadCallError('A phase grid needs at least 2 points.')
    if not start < end:
        raise BadCallError('A phase grid needs start < end.')

    output = (start, end, points)

    return output

def digest_sweep(sweep):

    output = None

    if isinstance(sweep, str):
        if grid_separator in sweep:
            fields = sweep.split(grid_separator)
            if len(fields) != 3:
                raise BadCallError("A log-spaced sweep reads 'start:end:count', got '{}'.".format(sweep))
            start, end, count = float(fields[0]), float(fields[1]), int(fields[2])
            if start <= 0.0 or end < start or count < 1:
                raise BadCallError("A log-spaced sweep needs 0 < start <= end and count >= 1.")
            output = [float(ii) for ii in np.geomspace(start, end, count)]
        else:
            output = [float(ii) for ii in sweep.split(list_separator) if ii.strip() != '']
    else:
        output = [float(ii) for ii in np.atleast_1d(sweep)]

    if len(output) == 0:
        raise BadCallError('A sweep needs at least one value.')

    return output
