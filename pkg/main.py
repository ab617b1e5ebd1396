# main.py

from PyCayley_Cohomology._cli import cli


def main():
    cli(prog_name="cayley-check")


if __name__ == "__main__":
    main()
