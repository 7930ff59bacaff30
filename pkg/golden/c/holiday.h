// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

#ifndef KNOW_HOLIDAY_H
#define KNOW_HOLIDAY_H

#include <stdbool.h>
#include <stddef.h>

/* Holiday */
#define KNOW_HOLIDAY_TYPE_IRI "https://know.dev/Holiday"

typedef struct Holiday {
    const char *id;
} Holiday;

#endif /* KNOW_HOLIDAY_H */
