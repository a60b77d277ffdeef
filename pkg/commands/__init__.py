# Import command groups from command files
from commands.totient import totient_commands
from commands.classify import classify_commands
from commands.verify import verify_commands

# Make command lists available when importing from commands
__all__ = ['totient_commands', 'classify_commands', 'verify_commands']
