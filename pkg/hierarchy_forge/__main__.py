import rich.traceback

from hierarchy_forge.cli import cli

rich.traceback.install()

if __name__ == "__main__":
    cli()
