from . import corpus_commands, ring_commands
