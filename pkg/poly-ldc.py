from poly_ldc_lib.cli import app

if __name__ == '__main__':
    app()
