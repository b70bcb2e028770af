from django.apps import AppConfig


class LatticeConfig(AppConfig):
    name = "lattice"
    verbose_name = "Supernode lattice, supernode template and leaf holonomies"
