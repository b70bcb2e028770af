from django.apps import AppConfig


class AlgebraConfig(AppConfig):
    name = "algebra"
    verbose_name = "Exact quaternions and 24-cell geometry"
