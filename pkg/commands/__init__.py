# pylint: disable=C0415

def import_commands():
    from commands.bench import bench
    from commands.estimate import estimate
    from commands.synth import synth
    return [bench, estimate, synth]
