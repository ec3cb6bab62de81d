from leafspan.app import build_cli

if __name__ == "__main__":
    build_cli()(prog_name="leafspan")
