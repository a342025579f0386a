import numpy as np

from mulinl.bases.errors import InvalidSceneError
from mulinl.utils.random import stream_for


ARCLENGTH_SAMPLES = 4096
MAX_REJECTION_ROUNDS = 100


def invalid_scene(field, message):
    errors = InvalidSceneError()
    errors.add_error(field, message)
    return errors


def inside(points, bounds):
    bounds = np.asarray(bounds, dtype=float)
    return np.all((points >= bounds[:, 0]) & (points <= bounds[:, 1]), axis=1)


def rotation_matrix(rotation_degrees):
    vector = np.radians(np.asarray(rotation_degrees, dtype=float))
    angle = np.linalg.norm(vector)
    if angle == 0:
        return np.eye(3)
    (x, y, z) = vector / angle
    cross = np.array([[0, -z, y],
                      [z, 0, -x],
                      [-y, x, 0]])
    return np.eye(3) + np.sin(angle) * cross + (1 - np.cos(angle)) * cross @ cross


def cross_matrix(vector):
    (x, y, z) = vector
    return np.array([[0, -z, y],
                     [z, 0, -x],
                     [-y, x, 0]])


def camera_matrix(camera):
    focal = float(camera.get('focal', 800))
    return np.array([[focal, 0, camera['width'] / 2],
                     [0, focal, camera['height'] / 2],
                     [0, 0, 1]])


def homography_matrix(spec, structure):
    """Maps the first image onto the second for points of the plane n.X = d."""
    camera = spec.camera
    calibration = camera_matrix(camera)
    rotation = rotation_matrix(camera.get('rotation', [0, 0, 0]))
    translation = np.asarray(camera.get('translation', [0, 0, 0]), dtype=float)
    normal = np.asarray(structure.parameters['normal'], dtype=float)
    normal = normal / np.linalg.norm(normal)
    distance = float(structure.parameters['distance'])
    return calibration @ (rotation + np.outer(translation, normal) / distance) @ np.linalg.inv(calibration)


def fundamental_matrix(spec, structure):
    calibration = camera_matrix(spec.camera)
    rotation = rotation_matrix(structure.parameters.get('rotation', [0, 0, 0]))
    translation = np.asarray(structure.parameters['translation'], dtype=float)
    inverse = np.linalg.inv(calibration)
    return inverse.T @ cross_matrix(translation) @ rotation @ inverse


def line_points(spec, structure, rng):
    bounds = np.asarray(spec.bounds, dtype=float)
    parameters = structure.parameters
    if 'start' in parameters and 'end' in parameters:
        start = np.asarray(parameters['start'], dtype=float)
        end = np.asarray(parameters['end'], dtype=float)
    else:
        widths = bounds[:, 1] - bounds[:, 0]
        center = rng.uniform(bounds[:, 0] + widths / 4, bounds[:, 1] - widths / 4)
        angle = rng.uniform(0, np.pi)
        direction = np.array([np.cos(angle), np.sin(angle)])
        with np.errstate(divide='ignore'):
            lows = (bounds[:, 0] - center) / direction
            highs = (bounds[:, 1] - center) / direction
        reach = np.where(direction != 0, np.minimum(lows, highs), -np.inf).max()
        stretch = np.where(direction != 0, np.maximum(lows, highs), np.inf).min()
        (start, end) = (center + reach * direction, center + stretch * direction)
    steps = rng.uniform(0, 1, structure.n_in)
    return start + steps[:, None] * (end - start)


def ellipse_points(spec, structure, rng):
    parameters = structure.parameters
    if 'center' not in parameters or 'axes' not in parameters:
        raise invalid_scene('structures', 'an ellipse needs a center and axes.')
    center = np.asarray(parameters['center'], dtype=float)
    (major, minor) = parameters['axes']
    angle = np.radians(parameters.get('angle', 0.0))
    rotation = np.array([[np.cos(angle), -np.sin(angle)],
                         [np.sin(angle), np.cos(angle)]])

    def on_ellipse(phis):
        return center + np.stack([major * np.cos(phis), minor * np.sin(phis)], axis=-1) @ rotation.T

    phis = np.linspace(0, 2 * np.pi, ARCLENGTH_SAMPLES + 1)
    outline = on_ellipse(phis)
    if not inside(outline, spec.bounds).all():
        raise invalid_scene('structures', 'ellipse centered at {} leaves the bounds.'.format(list(center)))
    arclength = np.concatenate([[0], np.cumsum(np.linalg.norm(np.diff(outline, axis=0), axis=1))])
    positions = rng.uniform(0, arclength[-1], structure.n_in)
    return on_ellipse(np.interp(positions, arclength, phis))


def cylinder_points(spec, structure, rng):
    bounds = np.asarray(spec.bounds, dtype=float)
    parameters = structure.parameters
    radius = float(parameters['radius'])
    length = float(parameters.get('length', 10 * radius))
    if 'axis' in parameters:
        axis = np.asarray(parameters['axis'], dtype=float)
    else:
        axis = rng.normal(size=3)
    axis = axis / np.linalg.norm(axis)
    if 'center' in parameters:
        center = np.asarray(parameters['center'], dtype=float)
    else:
        reach = radius + length / 2
        center = rng.uniform(bounds[:, 0] + reach, bounds[:, 1] - reach)

    helper = np.eye(3)[np.argmin(np.abs(axis))]
    first = np.cross(axis, helper)
    first /= np.linalg.norm(first)
    second = np.cross(axis, first)
    heights = rng.uniform(-length / 2, length / 2, structure.n_in)
    phis = rng.uniform(0, 2 * np.pi, structure.n_in)
    points = center + heights[:, None] * axis \
             + radius * (np.cos(phis)[:, None] * first + np.sin(phis)[:, None] * second)
    if not inside(points, bounds).all():
        raise invalid_scene('structures', 'cylinder of radius {} leaves the bounds.'.format(radius))
    return points


def image_region(spec, structure):
    region = structure.parameters.get('region')
    if region is None:
        return np.asarray(spec.bounds[:2], dtype=float)
    return np.asarray(region, dtype=float)


def rejection_sample(spec, structure, rng, transfer):
    region = image_region(spec, structure)
    accepted = []
    count = 0
    for _ in range(MAX_REJECTION_ROUNDS):
        first = rng.uniform(region[:, 0], region[:, 1], size=(structure.n_in, 2))
        pairs = transfer(first, rng)
        pairs = pairs[np.isfinite(pairs).all(axis=1) & inside(pairs, spec.bounds)]
        accepted.append(pairs)
        count += len(pairs)
        if count >= structure.n_in:
            return np.concatenate(accepted)[:structure.n_in]
    raise invalid_scene('structures', 'too few correspondences land inside both images.')


def homography_points(spec, structure, rng):
    homography = homography_matrix(spec, structure)

    def transfer(first, rng):
        mapped = np.hstack([first, np.ones((len(first), 1))]) @ homography.T
        with np.errstate(divide='ignore', invalid='ignore'):
            second = mapped[:, :2] / mapped[:, 2:]
        second[mapped[:, 2] <= 0] = np.nan
        return np.hstack([first, second])

    return rejection_sample(spec, structure, rng, transfer)


def fundamental_points(spec, structure, rng):
    calibration = camera_matrix(spec.camera)
    rotation = rotation_matrix(structure.parameters.get('rotation', [0, 0, 0]))
    translation = np.asarray(structure.parameters['translation'], dtype=float)
    (near, far) = structure.parameters.get('depth', [5.0, 15.0])

    def transfer(first, rng):
        depths = rng.uniform(near, far, len(first))
        rays = np.hstack([first, np.ones((len(first), 1))]) @ np.linalg.inv(calibration).T
        moved = (depths[:, None] * rays) @ rotation.T + translation
        projected = moved @ calibration.T
        with np.errstate(divide='ignore', invalid='ignore'):
            second = projected[:, :2] / projected[:, 2:]
        second[moved[:, 2] <= 0] = np.nan
        return np.hstack([first, second])

    return rejection_sample(spec, structure, rng, transfer)


GENERATORS = {'line2d': line_points,
              'ellipse2d': ellipse_points,
              'cylinder3d': cylinder_points,
              'homography': homography_points,
              'fundmat': fundamental_points}


def outlier_box(spec, inliers):
    bounds = np.asarray(spec.bounds, dtype=float)
    if not spec.outlier_inflation or not len(inliers):
        return bounds
    (low, high) = (inliers.min(axis=0), inliers.max(axis=0))
    margin = (high - low) * spec.outlier_inflation / 2
    return np.stack([low - margin, high + margin], axis=1)


def generate(spec, seed):
    """Points of every structure in turn, then the outliers.

    Labels hold the structure index or -1 for outliers.
    """
    rng = stream_for(seed)
    generator = GENERATORS[spec.model]
    blocks = []
    labels = []
    for (index, structure) in enumerate(spec.structures):
        points = generator(spec, structure, rng)
        blocks.append(points + rng.normal(0, structure.sigma, points.shape))
        labels.append(np.full(structure.n_in, index, dtype=int))

    dimension = len(spec.bounds)
    inliers = np.concatenate(blocks) if blocks else np.empty((0, dimension))
    box = outlier_box(spec, inliers)
    outliers = rng.uniform(box[:, 0], box[:, 1], size=(spec.outliers, dimension))
    labels.append(np.full(spec.outliers, -1, dtype=int))

    return np.concatenate([inliers, outliers]), np.concatenate(labels)
