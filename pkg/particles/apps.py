from django.apps import AppConfig


class ParticlesConfig(AppConfig):
    name = "particles"
    verbose_name = "Charge and color decoding of e8 roots"
