from leafdist.cli.commands import leafdist

if __name__ == "__main__":
    leafdist()
